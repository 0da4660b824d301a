#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "spectree/poly.hpp"

namespace spectree {

// Sturm chain of the squarefree part; exact real-root counting over Q.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p) {
        IntPoly s0 = squarefree_part(p);
        if (s0.degree() < 0) throw hypothesis_error("sturm: zero polynomial");
        chain_.push_back(s0);
        if (s0.degree() == 0) return;
        chain_.push_back(s0.derivative().primitive_part());
        while (chain_.back().degree() > 0) {
            IntPoly r = detail::signed_prem(chain_[chain_.size() - 2], chain_.back());
            if (r.is_zero()) break;  // squarefree input: only possible at degree 0
            // negate and strip the (positive) content; sign must be kept
            r = -r;
            mpz_class c = r.content();
            std::vector<mpz_class> v = r.coeffs();
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            chain_.emplace_back(std::move(v));
        }
    }

    const IntPoly& squarefree() const { return chain_.front(); }

    int variations_at(const mpq_class& t) const {
        int var = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = sgn(p.eval(t));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int variations_at_pos_inf() const {
        int var = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = sgn(p.leading());
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int variations_at_neg_inf() const {
        int var = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = sgn(p.leading());
            if (p.degree() % 2 == 1) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // distinct real roots in (a, b]
    int count_roots(const mpq_class& a, const mpq_class& b) const {
        if (a >= b) throw parameter_error("sturm: requires a < b");
        return variations_at(a) - variations_at(b);
    }

    // distinct real roots in (a, +inf)
    int count_roots_above(const mpq_class& a) const {
        return variations_at(a) - variations_at_pos_inf();
    }

    int count_real_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

    bool is_root(const mpq_class& t) const { return chain_.front().eval(t) == 0; }

    // Cauchy bound: all real roots lie in [-B, B]
    mpq_class root_bound() const {
        const IntPoly& p = chain_.front();
        mpz_class maxc = 0;
        for (int i = 0; i < p.degree(); ++i) {
            mpz_class a = abs(p[i]);
            if (a > maxc) maxc = a;
        }
        mpq_class b(maxc, abs(p.leading()));
        b.canonicalize();
        return b + 1;
    }

private:
    static int sgn(const mpq_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
    static int sgn(const mpz_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
    std::vector<IntPoly> chain_;
};

inline int sturm_count(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
    return SturmChain(p).count_roots(a, b);
}

struct RootEnclosure {
    mpq_class lo, hi;  // largest root lies in (lo, hi]
};

// Rational enclosure of the largest real root, width <= tol.
inline std::optional<RootEnclosure> largest_root_enclosure(const IntPoly& p, const mpq_class& tol) {
    SturmChain chain(p);
    if (chain.count_real_roots() == 0) return std::nullopt;
    mpq_class hi = chain.root_bound();
    mpq_class lo = -hi;
    // invariant: at least one root in (lo, hi], none above hi
    while (hi - lo > tol) {
        mpq_class mid = (lo + hi) / 2;
        if (chain.count_roots_above(mid) > 0) {
            lo = mid;
        } else if (chain.is_root(mid)) {
            // landed exactly on the largest root
            return RootEnclosure{mid - tol / 2, mid + tol / 2};
        } else {
            hi = mid;
        }
    }
    return RootEnclosure{lo, hi};
}

} // namespace spectree
