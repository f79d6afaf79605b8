#pragma once

// The coefficient ring of the engine: the field of fractions of Laurent
// polynomials in v = q^{1/2} over Q(sqrt 2), extended by one square root
//
//     s,   s^2 = q + q^{-1} = v^2 + v^{-2}.
//
// Elements are stored as a + b*s with a, b reduced fractions in canonical
// form: the denominator is an ordinary polynomial in v with constant term 1
// and no common factor with the numerator, so equality is structural.
// Canonical text form (round-trips bit-exactly):
//
//     elem := part (" + (" part ")*s")?
//     part := poly | "(" poly ") / (" poly ")"
//     poly := term (" + " term)*
//     term := rat ("*r2")? ("*q^" frac)?        e.g.  -3/2*r2*q^-5/2
//
// Exponents of q are printed as reduced fractions over 2 ("q^3", "q^-1/2").

#include "qla/laurent.hpp"

#include <string>
#include <utility>

namespace qla {

class Frac {
public:
    Frac() : num_(), den_(LaurentPoly::one()) {}
    Frac(LaurentPoly n) : num_(std::move(n)), den_(LaurentPoly::one()) {}
    Frac(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw MathError("Frac: zero denominator");
        reduce();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    friend bool operator==(const Frac&, const Frac&) = default;

    Frac operator-() const {
        Frac r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.den_.is_one() && b.den_.is_one()) return Frac(a.num_ + b.num_);
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }

    friend Frac operator*(const Frac& a, const Frac& b) {
        if (a.den_.is_one() && b.den_.is_one()) return Frac(a.num_ * b.num_);
        return Frac(a.num_ * b.num_, a.den_ * b.den_);
    }

    Frac inv() const {
        if (num_.is_zero()) throw MathError("Frac: division by zero");
        return Frac(den_, num_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inv(); }

    Frac conj() const { return Frac(num_.conj(), den_.conj()); }

    BaseScalar eval(const BaseScalar& v0) const {
        BaseScalar d = den_.eval(v0);
        if (d.is_zero()) throw PoleError("Frac: pole at v = " + v0.str());
        return num_.eval(v0) / d;
    }

private:
    LaurentPoly num_, den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        int sn = num_.lo(), sd = den_.lo();
        LaurentPoly n = num_.shifted(-sn), d = den_.shifted(-sd);
        LaurentPoly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = poly_divexact(n, g);
            d = poly_divexact(d, g);
        }
        BaseScalar c = d.coeff(0).inv();
        num_ = n.scaled(c).shifted(sn - sd);
        den_ = d.scaled(c);
    }
};

class RingElem {
public:
    RingElem() = default;  // zero
    RingElem(int n) : a_(LaurentPoly::constant(BaseScalar(n))) {}
    RingElem(const Rational& r) : a_(LaurentPoly::constant(BaseScalar(r))) {}
    RingElem(const BaseScalar& c) : a_(LaurentPoly::constant(c)) {}
    explicit RingElem(Frac a) : a_(std::move(a)) {}
    RingElem(Frac a, Frac b) : a_(std::move(a)), b_(std::move(b)) {}

    static RingElem s() { return RingElem(Frac(), Frac(LaurentPoly::one())); }
    static RingElem vpow(int n) { return RingElem(Frac(LaurentPoly::vpow(n))); }

    const Frac& plain() const { return a_; }
    const Frac& scoef() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    friend bool operator==(const RingElem&, const RingElem&) = default;

    RingElem operator-() const { return RingElem(-a_, -b_); }

    friend RingElem operator+(const RingElem& x, const RingElem& y) {
        return RingElem(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend RingElem operator-(const RingElem& x, const RingElem& y) {
        return RingElem(x.a_ - y.a_, x.b_ - y.b_);
    }
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }

    friend RingElem operator*(const RingElem& x, const RingElem& y) {
        if (x.b_.is_zero() && y.b_.is_zero()) return RingElem(x.a_ * y.a_);
        Frac w = ssquare();
        return RingElem(x.a_ * y.a_ + (x.b_ * y.b_) * w, x.a_ * y.b_ + x.b_ * y.a_);
    }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    // (a + b s)^{-1} = (a - b s) / (a^2 - b^2 (q + q^{-1})); the norm vanishes
    // only at 0 because q + q^{-1} is not a square in the fraction field.
    RingElem inv() const {
        Frac n = a_ * a_ - (b_ * b_) * ssquare();
        if (n.is_zero()) throw MathError("RingElem: division by zero");
        Frac ninv = n.inv();
        return RingElem(a_ * ninv, -(b_ * ninv));
    }
    friend RingElem operator/(const RingElem& x, const RingElem& y) { return x * y.inv(); }

    RingElem pow(int e) const {
        if (e < 0) return inv().pow(-e);
        RingElem r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // The bar involution: v -> v^{-1} (so q -> q^{-1}); s and sqrt2 are fixed.
    RingElem qconj() const { return RingElem(a_.conj(), b_.conj()); }

    // v = 1, s = sqrt 2.
    BaseScalar eval_classical() const {
        BaseScalar one(1);
        return a_.eval(one) + b_.eval(one) * BaseScalar::sqrt2();
    }

    // Exact value at a rational point v = v0: plain + scoef * sqrt(v0^2 + v0^{-2}).
    struct Numeric {
        BaseScalar plain, scoef;
        Rational v;
    };
    Numeric eval_numeric(const Rational& v0) const {
        if (v0 == 0) throw PoleError("RingElem: v = 0");
        BaseScalar p(v0);
        return {a_.eval(p), b_.eval(p), v0};
    }

    std::string str() const;
    static RingElem parse(const std::string& text);

private:
    Frac a_, b_;  // a + b*s

    static Frac ssquare() {
        LaurentPoly w = LaurentPoly::vpow(2) + LaurentPoly::vpow(-2);
        return Frac(std::move(w));
    }
};

inline RingElem qpow(int n) { return RingElem::vpow(2 * n); }   // q^n
inline RingElem qhalf(int n) { return RingElem::vpow(n); }      // q^{n/2}
inline RingElem selem() { return RingElem::s(); }

// [n]_q with q-exponent step measured in powers of v: step = 2 gives the
// plain q-integer, step = 2d gives [n] in the base q^d.
inline RingElem qint_step(int n, int step) {
    if (n < 0) return -qint_step(-n, step);
    RingElem r;
    for (int k = 0; k < n; ++k) r += RingElem::vpow(step * (n - 1 - 2 * k));
    return r;
}

inline RingElem qnum(int n) { return qint_step(n, 2); }

inline RingElem qbinom_step(int n, int k, int step) {
    RingElem r(1);
    for (int j = 1; j <= k; ++j) r = r * qint_step(n - j + 1, step) / qint_step(j, step);
    return r;
}

// ---- canonical text form ----------------------------------------------

namespace detail {

inline std::string exp_str(int e) {  // v-exponent e as a q-exponent e/2
    if (e % 2 == 0) return std::to_string(e / 2);
    return std::to_string(e) + "/2";
}

inline void append_term(std::string& out, const Rational& r, bool isr2, int e) {
    if (!out.empty()) out += " + ";
    bool unit = (r == 1 || r == -1) && (isr2 || e != 0);
    std::string t;
    if (r < 0) t += "-";
    if (!unit) t += rational_str(r < 0 ? Rational(-r) : r);
    bool started = !unit;
    if (isr2) {
        if (started) t += "*";
        t += "r2";
        started = true;
    }
    if (e != 0) {
        if (started) t += "*";
        t += "q^" + exp_str(e);
    }
    out += t;
}

inline std::string poly_str(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [e, c] : p.terms()) {
        if (c.rat != 0) append_term(out, c.rat, false, e);
        if (c.root2 != 0) append_term(out, c.root2, true, e);
    }
    return out;
}

inline std::string part_str(const Frac& f) {
    if (f.is_poly()) return poly_str(f.num());
    return "(" + poly_str(f.num()) + ") / (" + poly_str(f.den()) + ")";
}

class ElemScanner {
public:
    explicit ElemScanner(const std::string& s) : s_(s) {}

    RingElem run() {
        Frac a = part();
        Frac b;
        skip_ws();
        if (!eof()) {
            expect('+');
            expect('(');
            b = part();
            expect(')');
            expect('*');
            expect('s');
        }
        skip_ws();
        if (!eof()) fail("trailing input");
        return RingElem(std::move(a), std::move(b));
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("ring element parse: " + why + " at offset " + std::to_string(i_));
    }
    void skip_ws() {
        while (i_ < s_.size() && s_[i_] == ' ') ++i_;
    }
    bool eof() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    // Peeks past a '+' for the '(' that opens a denominator-free s part.
    bool plus_then_paren() {
        size_t j = i_;
        while (j < s_.size() && s_[j] == ' ') ++j;
        if (j >= s_.size() || s_[j] != '+') return false;
        ++j;
        while (j < s_.size() && s_[j] == ' ') ++j;
        return j < s_.size() && s_[j] == '(';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    BigInt digits() {
        skip_ws();
        size_t start = i_;
        while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') ++i_;
        if (i_ == start) fail("expected digits");
        return BigInt(s_.substr(start, i_ - start));
    }

    Frac part() {
        if (peek() == '(') {
            ++i_;
            LaurentPoly n = poly();
            expect(')');
            expect('/');
            expect('(');
            LaurentPoly d = poly();
            expect(')');
            return Frac(std::move(n), std::move(d));
        }
        return Frac(poly());
    }

    LaurentPoly poly() {
        LaurentPoly p;
        term(p);
        while (true) {
            skip_ws();
            if (plus_then_paren()) break;  // belongs to the s part
            if (peek() != '+') break;
            ++i_;
            term(p);
        }
        return p;
    }

    void term(LaurentPoly& p) {
        bool neg = false;
        if (peek() == '-') {
            ++i_;
            neg = true;
        }
        Rational r(1);
        bool isr2 = false;
        int e = 0;
        bool have_rat = false, have_r2 = false, have_q = false, first = true;
        while (true) {
            char c = peek();
            if (first && c >= '0' && c <= '9') {
                BigInt num = digits();
                BigInt den(1);
                if (peek() == '/') {
                    size_t save = i_;
                    ++i_;
                    char d = peek();
                    if (d >= '0' && d <= '9')
                        den = digits();
                    else
                        i_ = save;  // the '/' opens a denominator part
                }
                r = Rational(num, den);
                have_rat = true;
            } else if (c == 'r') {
                ++i_;
                expect('2');
                if (have_r2 || have_q) fail("misplaced r2");
                have_r2 = isr2 = true;
            } else if (c == 'q') {
                ++i_;
                expect('^');
                if (have_q) fail("repeated exponent");
                have_q = true;
                bool eneg = false;
                if (peek() == '-') {
                    ++i_;
                    eneg = true;
                }
                BigInt whole = digits();
                BigInt half(0);
                if (peek() == '/') {
                    ++i_;
                    expect('2');
                    half = 1;
                }
                BigInt ve = half == 1 ? whole : 2 * whole;
                if (half == 1 && whole % 2 == 0) fail("exponent not reduced");
                if (ve > 1000000 || ve < 0) fail("exponent out of range");
                e = static_cast<int>(ve);
                if (eneg) e = -e;
            } else if (first) {
                fail("expected term");
            }
            first = false;
            if (peek() == '*') {
                ++i_;
                continue;
            }
            break;
        }
        (void)have_rat;
        if (neg) r = -r;
        p.add_term(e, isr2 ? BaseScalar(Rational(0), r) : BaseScalar(r));
    }
};

}  // namespace detail

inline std::string RingElem::str() const {
    if (b_.is_zero()) return detail::part_str(a_);
    return detail::part_str(a_) + " + (" + detail::part_str(b_) + ")*s";
}

inline RingElem RingElem::parse(const std::string& text) {
    return detail::ElemScanner(text).run();
}

inline std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << x.str(); }

}  // namespace qla
