#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "spectree/canonical.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/families.hpp"
#include "spectree/graph.hpp"
#include "spectree/graph_ops.hpp"
#include "spectree/poly.hpp"
#include "spectree/sturm.hpp"

namespace spectree {

struct LaplacianFacts {
    int n = 0;
    long m = 0;
    int components = 0;
    mpz_class spanning_trees;  // meaningful for connected inputs
    mpz_class sum_deg_sq;
    mpz_class sum_deg_cube;           // valid only with a bipartiteness certificate
    bool sum_deg_cube_valid = false;  // trees self-certify: m = n-1, connected
};

namespace detail {

// power sums of the roots of a monic integer polynomial, via Newton's identities
inline std::vector<mpz_class> root_power_sums(const IntPoly& poly, int upto) {
    int n = poly.degree();
    // e_k = (-1)^k * coeff(n-k)
    std::vector<mpz_class> e(n + 1);
    for (int k = 0; k <= n; ++k) {
        e[k] = poly[n - k];
        if (k % 2) e[k] = -e[k];
    }
    std::vector<mpz_class> p(upto + 1);
    p[0] = n;
    for (int k = 1; k <= upto; ++k) {
        mpz_class s = 0;
        for (int i = 1; i < k && i <= n; ++i) {
            mpz_class term = e[i] * p[k - i];
            if (i % 2 == 0) s -= term; else s += term;
        }
        if (k <= n) {
            mpz_class tail = mpz_class(k) * e[k];
            if (k % 2 == 0) s -= tail; else s += tail;
        }
        p[k] = s;
    }
    return p;
}

} // namespace detail

// Everything here is read from the polynomial alone; the graph is never consulted.
inline LaplacianFacts laplacian_facts(const IntPoly& poly) {
    int n = poly.degree();
    if (n <= 0 || poly[n] != 1)
        throw parameter_error("laplacian_facts: input must be monic of positive degree");
    if (poly[0] != 0)
        throw parameter_error("laplacian_facts: nonzero constant term (every Laplacian has root 0)");
    LaplacianFacts f;
    f.n = n;
    auto ps = detail::root_power_sums(poly, 3);
    if (ps[1] % 2 != 0) throw parameter_error("laplacian_facts: odd trace");
    f.m = mpz_class(ps[1] / 2).get_si();
    int low = 0;
    while (low <= n && poly[low] == 0) ++low;
    f.components = low;  // multiplicity of the root 0
    if (f.components == 1) {
        mpz_class a1 = poly[1];
        if (a1 < 0) a1 = -a1;
        if (a1 % n != 0) throw parameter_error("laplacian_facts: |a1| not divisible by n");
        f.spanning_trees = a1 / n;
    } else {
        f.spanning_trees = 0;
    }
    // tr L^2 = sum d^2 + sum d
    f.sum_deg_sq = ps[2] - 2 * mpz_class(f.m);
    // tr L^3 = sum d^3 + 3 sum d^2 - 6t; exposed only when triangle-freeness is
    // certified from the polynomial itself (connected with m = n-1 is a tree)
    if (f.components == 1 && f.m == n - 1) {
        f.sum_deg_cube = ps[3] - 3 * f.sum_deg_sq;
        f.sum_deg_cube_valid = true;
    }
    return f;
}

struct DegreeCensus {
    std::array<long, 4> counts{};  // vertices of degree 1..4
};

// Recovers the degree census of a tree with maximum degree <= 4 from its
// spectrum-determined moments.  The max-degree cap is licensed by the
// mu1 <= 5 certificate (max degree + 1 <= mu1).
inline DegreeCensus degree_recovery(const LaplacianFacts& facts, bool mu1_at_most_5) {
    if (!mu1_at_most_5)
        throw hypothesis_error("degree_recovery: requires a mu1 <= 5 certificate");
    if (facts.components != 1 || facts.m != facts.n - 1 || !facts.sum_deg_cube_valid)
        throw hypothesis_error("degree_recovery: input facts are not from a tree");
    // Vandermonde system on nodes 1..4 against moments (n, 2m, sum d^2, sum d^3)
    std::array<mpq_class, 4> rhs{mpq_class(facts.n), mpq_class(2 * facts.m),
                                 mpq_class(facts.sum_deg_sq), mpq_class(facts.sum_deg_cube)};
    std::array<std::array<mpq_class, 4>, 4> a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            mpz_class v = 1;
            for (int t = 0; t < i; ++t) v *= (j + 1);
            a[i][j] = mpq_class(v);
        }
    // Gaussian elimination over exact rationals
    std::array<mpq_class, 4> x;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (piv < 4 && a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int row = 0; row < 4; ++row) {
            if (row == col || a[row][col] == 0) continue;
            mpq_class factor = a[row][col] / a[col][col];
            for (int j = col; j < 4; ++j) a[row][j] -= factor * a[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    for (int i = 0; i < 4; ++i) x[i] = rhs[i] / a[i][i];
    DegreeCensus census;
    for (int i = 0; i < 4; ++i) {
        mpq_class xi = x[i];
        xi.canonicalize();
        if (xi.get_den() != 1 || xi < 0)
            throw inconsistency_error("degree_recovery: no nonnegative integer solution");
        census.counts[i] = mpz_class(xi.get_num()).get_si();
    }
    return census;
}

// All nonnegative integer solutions (y1,y2,y3,y4) of
//   y1 +   y2 +   y3 +   y4 = n_L
//   y1 + 2*y2 + 3*y3 + 4*y4 = 2*e_L
//        y2 + 3*y3 + 6*y4 = pairs_L
// where pairs_L is the adjacent-edge-pair (P3-copy) count of the candidate
// line graph, enumerated by y4.  Degrees above 4 are out of model.
inline std::vector<std::array<long, 4>> linegraph_degree_census(long n_L, long e_L, long pairs_L) {
    std::vector<std::array<long, 4>> out;
    for (long y4 = 0; y4 <= n_L; ++y4) {
        // eliminate: subtracting eq1 from eq2 gives y2 + 2y3 + 3y4 = 2e_L - n_L
        long A = 2 * e_L - n_L - 3 * y4;     // y2 + 2*y3
        long B = pairs_L - 6 * y4;           // y2 + 3*y3
        long y3 = B - A;
        long y2 = A - 2 * y3;
        long y1 = n_L - y2 - y3 - y4;
        if (y1 < 0 || y2 < 0 || y3 < 0) continue;
        out.push_back({y1, y2, y3, y4});
    }
    return out;
}

inline long adjacent_edge_pairs(const Graph& g) {
    long total = 0;
    for (int v = 0; v < g.order(); ++v) {
        long d = g.degree(v);
        total += d * (d - 1) / 2;
    }
    return total;
}

struct Mu1BoundsReport {
    mpq_class lower_bound;   // max degree + 1
    mpq_class upper_bound;   // edge expression bound
    RootEnclosure mu1;       // width <= 1e-9
    bool lower_ok = false;   // exact Sturm verdicts
    bool upper_ok = false;
    bool pass() const { return lower_ok && upper_ok; }
};

// max degree + 1 <= mu1 <= max over edges uv of
// (d_u(d_u+m_u) + d_v(d_v+m_v)) / (d_u+d_v), m_v = average neighbor degree.
inline Mu1BoundsReport mu1_bounds_check(const Graph& g) {
    if (g.size() == 0) throw parameter_error("mu1_bounds_check: edgeless input");
    int n = g.order();
    Mu1BoundsReport rep;
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    rep.lower_bound = max_deg + 1;
    std::vector<mpq_class> avg_nb(n);
    for (int v = 0; v < n; ++v) {
        mpz_class s = 0;
        g.for_neighbors(v, [&](int u) { s += g.degree(u); });
        avg_nb[v] = mpq_class(s, g.degree(v));
        avg_nb[v].canonicalize();
    }
    bool first = true;
    for (auto [u, v] : g.edges()) {
        mpq_class du = g.degree(u), dv = g.degree(v);
        mpq_class expr = (du * (du + avg_nb[u]) + dv * (dv + avg_nb[v])) / (du + dv);
        expr.canonicalize();
        if (first || expr > rep.upper_bound) rep.upper_bound = expr;
        first = false;
    }
    IntPoly lp = charpoly(g, MatrixKind::laplacian);
    SturmChain chain(lp);
    rep.mu1 = largest_root_enclosure(lp, mpq_class(mpz_class(1), mpz_class("1000000000"))).value();
    // exact gates: no root above upper bound; at least one root >= lower bound
    rep.upper_ok = (chain.count_roots_above(rep.upper_bound) == 0);
    rep.lower_ok = (chain.count_roots_above(rep.lower_bound) >= 1) || chain.is_root(rep.lower_bound);
    return rep;
}

namespace detail {

// follows the degree-2 chain starting from `from` away from `prev`;
// returns the degree of the first vertex of degree != 2 (or 2 on a cycle)
inline int chain_end_degree(const Graph& g, int prev, int from) {
    int a = prev, b = from;
    while (g.degree(b) == 2) {
        int next = -1;
        g.for_neighbors(b, [&](int u) {
            if (u != a) next = u;
        });
        a = b;
        b = next;
        if (b == prev) return 2;  // went around a cycle
    }
    return g.degree(b);
}

} // namespace detail

// uv lies on an internal path: the maximal degree-2 chain through uv ends at
// vertices of degree >= 3 on both sides.
inline bool is_internal_path_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw missing_edge_error("is_internal_path_edge: uv not an edge");
    int du = (g.degree(u) >= 3) ? g.degree(u) : detail::chain_end_degree(g, v, u);
    int dv = (g.degree(v) >= 3) ? g.degree(v) : detail::chain_end_degree(g, u, v);
    return du >= 3 && dv >= 3;
}

struct SubdivisionReport {
    RootEnclosure lambda1_before, lambda1_after;
    bool non_increasing = false;
};

namespace detail {

// exact comparison of the largest real roots of two integer polynomials;
// returns -1 / 0 / +1 for root(a) < / == / > root(b)
inline int compare_largest_roots(const IntPoly& a, const IntPoly& b) {
    SturmChain ca(a), cb(b);
    mpq_class alo, ahi, blo, bhi;
    {
        auto ea = largest_root_enclosure(a, mpq_class(1, 4)).value();
        auto eb = largest_root_enclosure(b, mpq_class(1, 4)).value();
        alo = ea.lo; ahi = ea.hi; blo = eb.lo; bhi = eb.hi;
    }
    for (int iter = 0; iter < 200; ++iter) {
        if (ahi < blo || (ahi == blo && ca.count_roots_above(ahi) == 0)) return -1;
        if (bhi < alo || (bhi == alo && cb.count_roots_above(bhi) == 0)) return 1;
        // overlapping: equal iff a common root sits in the overlap
        mpq_class lo = std::max(alo, blo), hi = std::min(ahi, bhi);
        IntPoly g = poly_gcd(a, b);
        if (g.degree() >= 1) {
            SturmChain cg(g);
            if (cg.count_roots(lo, hi) >= 1 &&
                ca.count_roots_above(hi) == 0 && cb.count_roots_above(hi) == 0 &&
                ca.count_roots(lo, hi) == 1 && cb.count_roots(lo, hi) == 1)
                return 0;
        }
        // refine both enclosures by bisection
        auto refine = [](SturmChain& c, mpq_class& lo2, mpq_class& hi2) {
            mpq_class mid = (lo2 + hi2) / 2;
            if (c.count_roots_above(mid) >= 1) lo2 = mid; else hi2 = mid;
        };
        refine(ca, alo, ahi);
        refine(cb, blo, bhi);
    }
    throw inconsistency_error("compare_largest_roots: failed to separate");
}

} // namespace detail

// Subdividing an internal-path edge of a connected graph (not the exceptional
// W_n) never increases the adjacency index.
inline SubdivisionReport subdivision_check(const Graph& g, int u, int v) {
    if (!g.is_connected()) throw parameter_error("subdivision_check: input must be connected");
    if (g.order() >= 6 && g.order() % 2 == 0) {
        Graph wn = w_graph(g.order());
        if (isomorphic(g, wn))
            throw structural_hypothesis_error("subdivision_check: exceptional graph W_n rejected");
    }
    // edges of a cycle count as internal-path edges when the whole graph is a cycle
    if (!is_internal_path_edge(g, u, v)) {
        bool all_deg2 = true;
        for (int w = 0; w < g.order(); ++w) all_deg2 &= (g.degree(w) == 2);
        if (!all_deg2) throw hypothesis_error("subdivision_check: uv is not an internal-path edge");
    }
    Graph h = subdivide_edge(g, u, v);
    IntPoly pg = charpoly(g, MatrixKind::adjacency);
    IntPoly ph = charpoly(h, MatrixKind::adjacency);
    SubdivisionReport rep;
    mpq_class tol(mpz_class(1), mpz_class("1000000000"));
    rep.lambda1_before = largest_root_enclosure(pg, tol).value();
    rep.lambda1_after = largest_root_enclosure(ph, tol).value();
    rep.non_increasing = detail::compare_largest_roots(ph, pg) <= 0;
    return rep;
}

// Laplacian charpoly of the complement from the Laplacian charpoly alone:
// roots {0} union {n - mu_i} over the nonzero-index positions.
inline IntPoly complement_laplacian(const IntPoly& poly, int n) {
    if (poly.degree() != n || n <= 0 || poly[n] != 1)
        throw parameter_error("complement_laplacian: input must be monic of degree n");
    if (poly[0] != 0)
        throw parameter_error("complement_laplacian: nonzero constant term");
    // product over all i of (mu - (n - mu_i)) = (-1)^n * P(n - mu)
    IntPoly shifted = poly.compose(IntPoly({mpz_class(n), mpz_class(-1)}));
    if (n % 2) shifted = shifted * IntPoly::constant(-1);
    // drop the image (mu - n) of one zero root, restore a zero root
    IntPoly result = shifted.divide_exact(IntPoly({mpz_class(-n), mpz_class(1)}));
    return result * IntPoly::x();
}

} // namespace spectree
