#pragma once

/**
 * @file rational.hpp
 * @brief Exact integer/rational arithmetic and the small combinatorial
 *        functions (factorial, binomial, Catalan) used throughout.
 *
 * Integers are arbitrary precision (Boost.Multiprecision cpp_int). A
 * Rational is always stored reduced with a positive denominator, so
 * structural equality is value equality.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetachi/error.hpp"

namespace thetachi {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design of arithmetic
    Rational(const BigInt& value) : value_(value) {} // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw Error(ErrorKind::invalid_argument, "zero denominator");
        value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                         : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    /// Largest integer <= *this.
    BigInt floor() const {
        BigInt n = numerator(), d = denominator();
        BigInt q = n / d;  // truncates toward zero
        if (n < 0 && q * d != n)
            --q;
        return q;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw Error(ErrorKind::invalid_argument, "division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

    /// Parses "p", "-p", "p/q". Surrounding whitespace is not accepted.
    static Rational parse(std::string_view text) {
        auto parse_int = [&](std::string_view part) {
            std::size_t i = 0;
            if (!part.empty() && (part[0] == '-' || part[0] == '+'))
                i = 1;
            if (i == part.size())
                throw Error(ErrorKind::invalid_argument, "malformed rational '" + std::string(text) + "'");
            for (std::size_t k = i; k < part.size(); ++k)
                if (part[k] < '0' || part[k] > '9')
                    throw Error(ErrorKind::invalid_argument, "malformed rational '" + std::string(text) + "'");
            std::string digits(part.substr(i));
            BigInt v(digits);
            return part[0] == '-' ? BigInt(-v) : v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorKind::invalid_argument, "zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    boost::multiprecision::cpp_rational value_{0};
};

/// x^e for any integer e; x must be nonzero when e < 0.
inline Rational pow(Rational base, std::int64_t e) {
    if (e < 0) {
        base = Rational(1) / base;
        e = -e;
    }
    Rational result(1);
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

inline Rational factorial(std::int64_t k) {
    if (k < 0)
        throw Error(ErrorKind::invalid_argument, "factorial of a negative number");
    BigInt acc = 1;
    for (std::int64_t i = 2; i <= k; ++i)
        acc *= i;
    return Rational(acc);
}

inline Rational binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n)
        throw Error(ErrorKind::invalid_argument,
                    "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") requires 0 <= k <= n");
    k = std::min(k, n - k);
    // running product stays integral: C(n-k+i, i) at step i
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        acc = acc * (n - k + i) / i;
    return Rational(acc);
}

inline Rational catalan(std::int64_t g) {
    if (g < 0)
        throw Error(ErrorKind::invalid_argument, "catalan of a negative index");
    return binomial(2 * g, g) / Rational(g + 1);
}

} // namespace thetachi
