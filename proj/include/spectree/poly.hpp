#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "spectree/errors.hpp"

namespace spectree {

// Dense univariate polynomial with arbitrary-precision integer coefficients,
// index = exponent, trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> cs) {
        for (long c : cs) coeffs_.emplace_back(c);
        trim();
    }
    explicit IntPoly(std::vector<mpz_class> cs) : coeffs_(std::move(cs)) { trim(); }

    static IntPoly constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    // c * lambda^e
    static IntPoly monomial(const mpz_class& c, int e) {
        std::vector<mpz_class> v(e + 1, 0);
        v[e] = c;
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return int(coeffs_.size()) - 1; }  // -1 for zero poly
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& operator[](int i) const {
        static const mpz_class zero = 0;
        return (i >= 0 && i < int(coeffs_.size())) ? coeffs_[i] : zero;
    }
    const mpz_class& leading() const {
        static const mpz_class zero = 0;
        return coeffs_.empty() ? zero : coeffs_.back();
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a) { return IntPoly{} - a; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const mpz_class& s) {
        std::vector<mpz_class> c = a.coeffs_;
        for (auto& x : c) x *= s;
        return IntPoly(std::move(c));
    }
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    mpz_class eval(const mpz_class& v) const {
        mpz_class r = 0;
        for (int i = degree(); i >= 0; --i) r = r * v + coeffs_[i];
        return r;
    }
    mpq_class eval(const mpq_class& v) const {
        mpq_class r = 0;
        for (int i = degree(); i >= 0; --i) r = r * v + mpq_class(coeffs_[i]);
        return r;
    }

    IntPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<mpz_class> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * mpz_class(long(i));
        return IntPoly(std::move(c));
    }

    // composition p(q(lambda))
    IntPoly compose(const IntPoly& q) const {
        IntPoly r;
        for (int i = degree(); i >= 0; --i) r = r * q + constant(coeffs_[i]);
        return r;
    }

    mpz_class content() const {
        mpz_class c = 0;
        for (const auto& x : coeffs_) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
        return c;  // 0 for the zero polynomial
    }

    IntPoly primitive_part() const {
        mpz_class c = content();
        if (c == 0) return {};
        if (leading() < 0) c = -c;  // normalize sign of leading coefficient
        std::vector<mpz_class> v = coeffs_;
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        return IntPoly(std::move(v));
    }

    // exact division; throws if the division is not exact
    IntPoly divide_exact(const IntPoly& d) const {
        if (d.is_zero()) throw inconsistency_error("polynomial division by zero");
        IntPoly rem = *this;
        if (rem.is_zero()) return {};
        if (rem.degree() < d.degree()) throw inconsistency_error("inexact polynomial division");
        std::vector<mpz_class> q(rem.degree() - d.degree() + 1, 0);
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            mpz_class f;
            mpz_class r = rem.leading() % d.leading();
            if (r != 0) throw inconsistency_error("inexact polynomial division");
            mpz_divexact(f.get_mpz_t(), rem.leading().get_mpz_t(), d.leading().get_mpz_t());
            int shift = rem.degree() - d.degree();
            q[shift] = f;
            rem = rem - d * monomial(f, shift);
        }
        if (!rem.is_zero()) throw inconsistency_error("inexact polynomial division");
        return IntPoly(std::move(q));
    }

    // space-separated coefficients, lowest degree first
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ' ';
            s += coeffs_[i].get_str();
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<mpz_class> coeffs_;
};

namespace detail {

// Sign-faithful pseudo-remainder: returns R with sign(R) = sign of the true
// rational remainder of a/b (a scaled by an even power of lc(b)).
inline IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
    int delta = a.degree() - b.degree();
    if (delta < 0) return a;
    int e = delta + 1;
    if (e % 2 == 1) ++e;  // even power keeps the scaling positive
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), e);
    IntPoly rem = a * scale;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        // lc(rem) is divisible by lc(b) by construction of the scaling
        mpz_class q = rem.leading() / b.leading();
        rem = rem - b * IntPoly::monomial(q, rem.degree() - b.degree());
    }
    return rem;
}

} // namespace detail

// gcd of primitive parts, leading coefficient positive
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = detail::signed_prem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) return p.primitive_part();
    IntPoly pp = p.primitive_part();
    IntPoly g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return pp.divide_exact(g).primitive_part();
}

} // namespace spectree
