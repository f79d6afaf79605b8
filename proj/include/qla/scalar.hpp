#pragma once

// Exact arithmetic in Q(sqrt 2).  Every coefficient in this library lives in
// this field, stored as a rational part plus a rational multiple of sqrt(2).

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qla {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct MathError : std::runtime_error {
    explicit MathError(const std::string& m) : std::runtime_error(m) {}
};

// Evaluation hit a zero denominator.
struct PoleError : MathError {
    explicit PoleError(const std::string& m) : MathError(m) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct BaseScalar {
    Rational rat;    // rational part
    Rational root2;  // coefficient of sqrt(2)

    BaseScalar() = default;
    BaseScalar(int n) : rat(n) {}
    BaseScalar(Rational r) : rat(std::move(r)) {}
    BaseScalar(Rational r, Rational w) : rat(std::move(r)), root2(std::move(w)) {}

    static BaseScalar sqrt2() { return BaseScalar(Rational(0), Rational(1)); }

    bool is_zero() const { return rat == 0 && root2 == 0; }

    friend bool operator==(const BaseScalar&, const BaseScalar&) = default;

    BaseScalar operator-() const { return {-rat, -root2}; }

    BaseScalar& operator+=(const BaseScalar& o) {
        rat += o.rat;
        root2 += o.root2;
        return *this;
    }
    BaseScalar& operator-=(const BaseScalar& o) {
        rat -= o.rat;
        root2 -= o.root2;
        return *this;
    }
    friend BaseScalar operator+(BaseScalar a, const BaseScalar& b) { return a += b; }
    friend BaseScalar operator-(BaseScalar a, const BaseScalar& b) { return a -= b; }

    friend BaseScalar operator*(const BaseScalar& a, const BaseScalar& b) {
        return {a.rat * b.rat + 2 * a.root2 * b.root2, a.rat * b.root2 + a.root2 * b.rat};
    }
    BaseScalar& operator*=(const BaseScalar& o) { return *this = *this * o; }

    // (a + b sqrt2)^{-1} = (a - b sqrt2)/(a^2 - 2 b^2); the norm vanishes only at 0.
    BaseScalar inv() const {
        Rational n = rat * rat - 2 * root2 * root2;
        if (n == 0) throw MathError("BaseScalar: division by zero");
        return {rat / n, -root2 / n};
    }
    friend BaseScalar operator/(const BaseScalar& a, const BaseScalar& b) { return a * b.inv(); }

    std::string str() const;
};

inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string BaseScalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (rat != 0) out = rational_str(rat);
    if (root2 != 0) {
        if (!out.empty()) out += " + ";
        if (root2 == 1)
            out += "r2";
        else if (root2 == -1)
            out += "-r2";
        else
            out += rational_str(root2) + "*r2";
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const BaseScalar& x) { return os << x.str(); }

}  // namespace qla
