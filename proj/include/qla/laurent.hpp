#pragma once

// Sparse Laurent polynomials over Q(sqrt 2) in the variable v = q^{1/2}:
// the monomial v^n stands for q^{n/2}.  Division helpers treat a polynomial
// whose exponents are all nonnegative as an ordinary polynomial in v.

#include "qla/scalar.hpp"

#include <map>

namespace qla {

class LaurentPoly {
public:
    LaurentPoly() = default;  // zero

    static LaurentPoly constant(const BaseScalar& c) { return term(c, 0); }
    static LaurentPoly one() { return term(BaseScalar(1), 0); }
    static LaurentPoly vpow(int n) { return term(BaseScalar(1), n); }
    static LaurentPoly term(const BaseScalar& c, int n) {
        LaurentPoly p;
        p.add_term(n, c);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == BaseScalar(1); }
    const std::map<int, BaseScalar>& terms() const { return t_; }

    BaseScalar coeff(int n) const {
        auto it = t_.find(n);
        return it == t_.end() ? BaseScalar() : it->second;
    }

    int lo() const { return t_.begin()->first; }    // requires nonzero
    int hi() const { return t_.rbegin()->first; }   // requires nonzero

    void add_term(int n, const BaseScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(n, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [n, c] : t_) r.t_.emplace(n, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [n, c] : o.t_) add_term(n, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [n, c] : o.t_) add_term(n, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [n, c] : a.t_)
            for (auto& [m, d] : b.t_) r.add_term(n + m, c * d);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const BaseScalar& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        for (auto& [n, x] : t_) r.t_.emplace(n, x * c);
        return r;
    }

    LaurentPoly shifted(int k) const {  // multiply by v^k
        LaurentPoly r;
        for (auto& [n, c] : t_) r.t_.emplace(n + k, c);
        return r;
    }

    LaurentPoly conj() const {  // v -> v^{-1}
        LaurentPoly r;
        for (auto& [n, c] : t_) r.t_.emplace(-n, c);
        return r;
    }

    BaseScalar eval(const BaseScalar& v0) const {
        BaseScalar iv;
        if (!is_zero() && lo() < 0) iv = v0.inv();
        BaseScalar acc;
        for (auto& [n, c] : t_) {
            BaseScalar p(1);
            const BaseScalar& base = n < 0 ? iv : v0;
            for (int k = 0; k < (n < 0 ? -n : n); ++k) p *= base;
            acc += c * p;
        }
        return acc;
    }

private:
    std::map<int, BaseScalar> t_;  // exponent -> nonzero coefficient
};

// Quotient of ordinary polynomials (exponents >= 0); remainder left in a.
inline LaurentPoly poly_divmod(LaurentPoly a, const LaurentPoly& b, LaurentPoly* rem) {
    if (b.is_zero()) throw MathError("poly_divmod: zero divisor");
    LaurentPoly quo;
    BaseScalar blead = b.coeff(b.hi());
    while (!a.is_zero() && a.hi() >= b.hi()) {
        BaseScalar c = a.coeff(a.hi()) / blead;
        int n = a.hi() - b.hi();
        quo.add_term(n, c);
        a -= b.shifted(n).scaled(c);
    }
    if (rem) *rem = a;
    return quo;
}

// Strips the content monomial v^k, leaving a nonzero constant term.
inline LaurentPoly strip_vpow(const LaurentPoly& a) {
    if (a.is_zero()) return a;
    return a.shifted(-a.lo());
}

// Normalized so that the constant term is exactly 1.
inline LaurentPoly monic_from_below(const LaurentPoly& a) {
    if (a.is_zero()) return a;
    return a.scaled(a.coeff(a.lo()).inv());
}

// Gcd in Q(sqrt2)[v] up to units; the result has constant term 1.
inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    a = strip_vpow(a);
    b = strip_vpow(b);
    while (!b.is_zero()) {
        LaurentPoly rem;
        poly_divmod(a, b, &rem);
        a = b;
        b = strip_vpow(rem);
    }
    return monic_from_below(a);
}

inline LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return a;
    int sa = a.lo(), sb = b.lo();
    LaurentPoly rem;
    LaurentPoly quo = poly_divmod(a.shifted(-sa), b.shifted(-sb), &rem);
    if (!rem.is_zero()) throw MathError("poly_divexact: not divisible");
    return quo.shifted(sa - sb);
}

}  // namespace qla
