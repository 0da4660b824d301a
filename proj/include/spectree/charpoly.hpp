#pragma once

#include <gmpxx.h>

#include <vector>

#include "spectree/graph.hpp"
#include "spectree/poly.hpp"

namespace spectree {

enum class MatrixKind { adjacency, laplacian };

namespace detail {

using ZMat = std::vector<std::vector<mpz_class>>;

inline ZMat matrix_of(const Graph& g, MatrixKind kind) {
    int n = g.order();
    ZMat a(n, std::vector<mpz_class>(n, 0));
    for (auto [u, v] : g.edges()) {
        if (kind == MatrixKind::adjacency) {
            a[u][v] = 1;
            a[v][u] = 1;
        } else {
            a[u][v] = -1;
            a[v][u] = -1;
        }
    }
    if (kind == MatrixKind::laplacian)
        for (int v = 0; v < n; ++v) a[v][v] = g.degree(v);
    return a;
}

inline ZMat mat_mul(const ZMat& a, const ZMat& b) {
    int n = int(a.size());
    ZMat c(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Integer determinant via Bareiss fraction-free elimination.
inline mpz_class bareiss_det(ZMat a) {
    int n = int(a.size());
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

} // namespace detail

// Exact monic characteristic polynomial det(lambda*I - M) via the
// Faddeev-LeVerrier recurrence (all divisions exact over Z).
inline IntPoly charpoly(const Graph& g, MatrixKind kind) {
    int n = g.order();
    std::vector<mpz_class> coeffs(n + 1, 0);
    coeffs[n] = 1;
    if (n == 0) return IntPoly(std::move(coeffs));
    detail::ZMat a = detail::matrix_of(g, kind);
    detail::ZMat m = a;
    for (int k = 1; k <= n; ++k) {
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += m[i][i];
        mpz_class c;
        mpz_divexact_ui(c.get_mpz_t(), tr.get_mpz_t(), k);
        c = -c;
        coeffs[n - k] = c;
        if (k == n) break;
        for (int i = 0; i < n; ++i) m[i][i] += c;
        m = detail::mat_mul(a, m);
    }
    return IntPoly(std::move(coeffs));
}

// p_r: adjacency characteristic polynomial of the path P_r, with the
// conventions p_0 = 1, p_{-1} = 0, p_{-2} = -1 and
// p_r = lambda * p_{r-1} - p_{r-2}.
inline IntPoly path_poly(int r) {
    if (r < -2) throw parameter_error("path_poly requires r >= -2");
    IntPoly pm2({-1}), pm1;  // p_{-2} = -1, p_{-1} = 0
    if (r == -2) return pm2;
    if (r == -1) return pm1;
    IntPoly lam = IntPoly::x();
    IntPoly prev = pm2, cur = pm1;
    for (int i = 0; i <= r; ++i) {
        IntPoly next = lam * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

// All simple cycles through v (vertex sets), each listed once.
inline std::vector<std::vector<int>> cycles_through(const Graph& g, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{v};
    std::vector<char> used(g.order(), 0);
    used[v] = 1;
    auto rec = [&](auto&& self, int cur) -> void {
        g.for_neighbors(cur, [&](int u) {
            if (u == v) {
                // close the cycle once: second vertex below the last one
                if (path.size() >= 3 && path[1] < cur) out.push_back(path);
                return;
            }
            if (used[u]) return;
            used[u] = 1;
            path.push_back(u);
            self(self, u);
            path.pop_back();
            used[u] = 0;
        });
    };
    rec(rec, v);
    return out;
}

} // namespace detail

// Right-hand side of the vertex-deletion recurrence
//   lambda*P(G-v) - sum_{u~v} P(G-{u,v}) - 2*sum_{Z in C(v)} P(G-V(Z)),
// with every P on the right computed by the determinant route.
inline IntPoly deletion_charpoly(const Graph& g, int v) {
    IntPoly rhs = IntPoly::x() * charpoly(g.without_vertices({v}), MatrixKind::adjacency);
    g.for_neighbors(v, [&](int u) {
        rhs = rhs - charpoly(g.without_vertices({u, v}), MatrixKind::adjacency);
    });
    for (const auto& cyc : detail::cycles_through(g, v))
        rhs = rhs - charpoly(g.without_vertices(cyc), MatrixKind::adjacency) * mpz_class(2);
    return rhs;
}

// Matrix-Tree: any cofactor of the Laplacian.
inline mpz_class spanning_tree_count(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 1;
    detail::ZMat l = detail::matrix_of(g, MatrixKind::laplacian);
    detail::ZMat minor(n - 1, std::vector<mpz_class>(n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = l[i][j];
    return detail::bareiss_det(std::move(minor));
}

} // namespace spectree
