#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "spectree/poly.hpp"

namespace spectree {

// Integer-coefficient polynomial in x with a (possibly negative) minimum
// exponent; zero coefficients trimmed at both ends.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long min_exp, std::vector<mpz_class> cs) : min_exp_(min_exp), coeffs_(std::move(cs)) {
        normalize();
    }

    static LaurentPoly monomial(const mpz_class& c, long e) { return {e, {c}}; }
    static LaurentPoly from_poly(const IntPoly& p) { return {0, p.coeffs()}; }

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_exp_; }
    long max_exp() const { return min_exp_ + long(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    const mpz_class& coeff(long e) const {
        static const mpz_class zero = 0;
        if (is_zero() || e < min_exp_ || e > max_exp()) return zero;
        return coeffs_[std::size_t(e - min_exp_)];
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.min_exp_, b.min_exp_);
        long hi = std::max(a.max_exp(), b.max_exp());
        std::vector<mpz_class> c(std::size_t(hi - lo + 1), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[std::size_t(a.min_exp_ - lo) + i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[std::size_t(b.min_exp_ - lo) + i] += b.coeffs_[i];
        return {lo, std::move(c)};
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (b * mpz_class(-1)); }
    friend LaurentPoly operator*(const LaurentPoly& a, const mpz_class& s) {
        if (s == 0) return {};
        std::vector<mpz_class> c = a.coeffs_;
        for (auto& x : c) x *= s;
        return {a.min_exp_, std::move(c)};
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return {a.min_exp_ + b.min_exp_, std::move(c)};
    }
    bool operator==(const LaurentPoly& o) const {
        return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_;
    }

    // "min_exp=k c0 c1 ..." with coefficients from min_exp upward
    std::string to_string() const {
        if (is_zero()) return "min_exp=0 0";
        std::string s = "min_exp=" + std::to_string(min_exp_);
        for (const auto& c : coeffs_) s += " " + c.get_str();
        return s;
    }

private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            min_exp_ = 0;
            return;
        }
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + long(lead));
        min_exp_ += long(lead);
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    long min_exp_ = 0;
    std::vector<mpz_class> coeffs_;
};

// pre_factor * p(x + x^-1), expanded exactly over the integers.
inline LaurentPoly to_laurent(const IntPoly& p, const LaurentPoly& pre_factor) {
    LaurentPoly lam = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
    LaurentPoly r;
    for (int i = p.degree(); i >= 0; --i) r = r * lam + LaurentPoly::monomial(p[i], 0);
    return pre_factor * r;
}

} // namespace spectree
