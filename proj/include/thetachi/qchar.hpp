#pragma once

/**
 * @file qchar.hpp
 * @brief Characters (Hilbert series) of graded rings in product form.
 *
 * Every character handled here has the shape
 *
 *     sign * q^shift * prod_e (1 - q^e) / prod_d (1 - q^d)
 *
 * with positive integer exponents. This covers the characters of weighted
 * polynomial rings, of their quotients by regular sequences, and the
 * q-Euler characteristic of the associated Koszul-type complex. Because of
 * the restricted shape, the q -> 1 limit is a multiset-size check followed
 * by a product of exponents; no polynomial arithmetic is needed.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thetachi/error.hpp"
#include "thetachi/rational.hpp"

namespace thetachi {

/// Truncated Laurent series with integer coefficients. Coefficient i of
/// coeffs() belongs to q^(offset + i); values are known for exponents < order.
class PowerSeries {
public:
    PowerSeries(std::int64_t offset, std::vector<BigInt> coeffs)
        : offset_(offset), order_(offset + static_cast<std::int64_t>(coeffs.size())), coeffs_(std::move(coeffs)) {}

    std::int64_t offset() const { return offset_; }
    std::int64_t order() const { return order_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Coefficient of q^exp; zero below the offset. Throws past the order.
    BigInt coefficient(std::int64_t exp) const {
        if (exp >= order_)
            throw Error(ErrorKind::invalid_argument,
                        "coefficient of q^" + std::to_string(exp) + " lies beyond truncation order " +
                            std::to_string(order_));
        if (exp < offset_)
            return 0;
        return coeffs_[static_cast<std::size_t>(exp - offset_)];
    }

    /// Drops every coefficient at exponent >= new_order.
    PowerSeries truncated(std::int64_t new_order) const {
        if (new_order > order_)
            throw Error(ErrorKind::invalid_argument, "cannot extend a truncated series");
        std::vector<BigInt> c;
        for (std::int64_t e = offset_; e < new_order; ++e)
            c.push_back(coefficient(e));
        return PowerSeries(offset_, std::move(c));
    }

    /// Cauchy product; the result is valid up to the tightest order both
    /// inputs support.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::int64_t offset = a.offset_ + b.offset_;
        const std::int64_t order = std::min(a.order_ + b.offset_, b.order_ + a.offset_);
        std::vector<BigInt> c(static_cast<std::size_t>(std::max<std::int64_t>(order - offset, 0)));
        for (std::size_t k = 0; k < c.size(); ++k)
            for (std::size_t i = 0; i <= k && i < a.coeffs_.size(); ++i)
                if (k - i < b.coeffs_.size())
                    c[k] += a.coeffs_[i] * b.coeffs_[k - i];
        return PowerSeries(offset, std::move(c));
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    /// Human-readable rendering, e.g. "1 + 2q + 2q^2 + O(q^3)".
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c == 0)
                continue;
            const std::int64_t e = offset_ + static_cast<std::int64_t>(i);
            const BigInt mag = abs(c);
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (mag != 1 || e == 0)
                out += mag.str();
            if (e != 0)
                out += e == 1 ? "q" : "q^" + std::to_string(e);
        }
        if (out.empty())
            out = "0";
        return out + " + O(q^" + std::to_string(order_) + ")";
    }

private:
    std::int64_t offset_;
    std::int64_t order_;
    std::vector<BigInt> coeffs_;
};

class CharProduct {
public:
    /// The constant character 1.
    CharProduct() = default;

    CharProduct(int sign, std::int64_t shift, std::vector<int> numer_exps, std::vector<int> denom_exps)
        : sign_(sign), shift_(shift), numer_(std::move(numer_exps)), denom_(std::move(denom_exps)) {
        if (sign != 1 && sign != -1)
            throw Error(ErrorKind::invalid_argument, "character sign must be +1 or -1");
        auto positive = [](int e) { return e >= 1; };
        if (!std::all_of(numer_.begin(), numer_.end(), positive) ||
            !std::all_of(denom_.begin(), denom_.end(), positive))
            throw Error(ErrorKind::invalid_argument, "character exponents must be positive integers");
        canonicalize();
    }

    int sign() const { return sign_; }
    std::int64_t shift() const { return shift_; }
    const std::vector<int>& numer_exps() const { return numer_; }
    const std::vector<int>& denom_exps() const { return denom_; }

    CharProduct inverse() const { return CharProduct(sign_, -shift_, denom_, numer_); }

    friend CharProduct operator*(const CharProduct& x, const CharProduct& y) {
        std::vector<int> numer = x.numer_;
        numer.insert(numer.end(), y.numer_.begin(), y.numer_.end());
        std::vector<int> denom = x.denom_;
        denom.insert(denom.end(), y.denom_.begin(), y.denom_.end());
        return CharProduct(x.sign_ * y.sign_, x.shift_ + y.shift_, std::move(numer), std::move(denom));
    }

    friend CharProduct operator/(const CharProduct& x, const CharProduct& y) { return x * y.inverse(); }

    friend bool operator==(const CharProduct&, const CharProduct&) = default;
    friend auto operator<=>(const CharProduct&, const CharProduct&) = default;

    /// e.g. "-q^-1 (1-q^2) / (1-q)"
    std::string str() const {
        auto factors = [](const std::vector<int>& exps) {
            std::string s;
            for (int e : exps)
                s += e == 1 ? "(1-q)" : "(1-q^" + std::to_string(e) + ")";
            return s;
        };
        std::string out = sign_ < 0 ? "-" : "";
        std::string body;
        if (shift_ != 0)
            body += shift_ == 1 ? "q" : "q^" + std::to_string(shift_);
        if (!numer_.empty())
            body += (body.empty() ? "" : " ") + factors(numer_);
        if (body.empty())
            body = "1";
        out += body;
        if (!denom_.empty())
            out += " / " + factors(denom_);
        return out;
    }

private:
    void canonicalize() {
        std::sort(numer_.begin(), numer_.end());
        std::sort(denom_.begin(), denom_.end());
        std::vector<int> n, d;
        std::size_t i = 0, j = 0;
        while (i < numer_.size() || j < denom_.size()) {
            if (j == denom_.size() || (i < numer_.size() && numer_[i] < denom_[j]))
                n.push_back(numer_[i++]);
            else if (i == numer_.size() || denom_[j] < numer_[i])
                d.push_back(denom_[j++]);
            else
                ++i, ++j;
        }
        numer_ = std::move(n);
        denom_ = std::move(d);
    }

    int sign_ = 1;
    std::int64_t shift_ = 0;
    std::vector<int> numer_;
    std::vector<int> denom_;
};

/// prod_j 1/(1 - q^{d_j}); the empty product is the constant 1.
inline CharProduct free_char(std::span<const int> degrees) {
    return CharProduct(1, 0, {}, std::vector<int>(degrees.begin(), degrees.end()));
}

/// Character of the polynomial ring on generators of the given weights.
inline CharProduct char_poly_ring(std::span<const int> weights) {
    if (weights.empty())
        throw Error(ErrorKind::invalid_argument, "polynomial ring needs at least one variable");
    for (int w : weights)
        if (w <= 0)
            throw Error(ErrorKind::invalid_argument, "variable weights must be positive, got " + std::to_string(w));
    return free_char(weights);
}

/// Character of A/(f_1, ..., f_k) when the f_j form a regular sequence:
/// ch(A) / ch(F).
inline CharProduct char_A0(std::span<const int> a_weights, std::span<const int> f_degrees) {
    if (f_degrees.size() > a_weights.size())
        throw Error(ErrorKind::invalid_argument, "more relations (" + std::to_string(f_degrees.size()) +
                                                     ") than variables (" + std::to_string(a_weights.size()) + ")");
    for (int d : f_degrees)
        if (d <= 0)
            throw Error(ErrorKind::invalid_argument, "relation degrees must be positive, got " + std::to_string(d));
    return char_poly_ring(a_weights) / free_char(f_degrees);
}

/// q-Euler characteristic of the complex A_0 (x) Lambda^k V with differential
/// sum_j D_j (x) dz_j:  (-1)^g q^{-sum deg D} ch(A_0) / ch(D-ring).
inline CharProduct q_euler(std::span<const int> a_weights, std::span<const int> f_degrees,
                           std::span<const int> d_degrees) {
    if (a_weights.size() != f_degrees.size() + d_degrees.size())
        throw Error(ErrorKind::limit_undefined,
                    "factor counts differ: |a| = " + std::to_string(a_weights.size()) + ", |f| + |D| = " +
                        std::to_string(f_degrees.size() + d_degrees.size()));
    for (int d : d_degrees)
        if (d <= 0)
            throw Error(ErrorKind::invalid_argument, "vector field degrees must be positive, got " + std::to_string(d));
    const std::int64_t total = std::accumulate(d_degrees.begin(), d_degrees.end(), std::int64_t{0});
    const int sign = d_degrees.size() % 2 == 0 ? 1 : -1;
    return CharProduct(sign, -total, {}, {}) * char_A0(a_weights, f_degrees) / free_char(d_degrees);
}

/// Exact value at q = 1. Each (1-q^k) behaves like k(1-q), so the limit
/// exists iff the factor counts match, and is then sign * prod e / prod d.
inline Rational limit_q1(const CharProduct& x) {
    if (x.numer_exps().size() != x.denom_exps().size())
        throw Error(ErrorKind::limit_undefined,
                    "factor counts differ: " + std::to_string(x.numer_exps().size()) + " in numerator, " +
                        std::to_string(x.denom_exps().size()) + " in denominator");
    BigInt num = x.sign(), den = 1;
    for (int e : x.numer_exps())
        num *= e;
    for (int d : x.denom_exps())
        den *= d;
    return Rational(num, den);
}

/// Laurent expansion valid for exponents < order.
inline PowerSeries expand(const CharProduct& x, std::int64_t order) {
    if (order <= x.shift())
        throw Error(ErrorKind::invalid_argument, "expansion order " + std::to_string(order) +
                                                     " must exceed the character's shift " +
                                                     std::to_string(x.shift()));
    const std::size_t len = static_cast<std::size_t>(order - x.shift());
    std::vector<BigInt> c(len);
    c[0] = x.sign();
    for (int e : x.numer_exps()) {
        const std::size_t step = static_cast<std::size_t>(e);
        for (std::size_t i = len; i-- > step;)
            c[i] -= c[i - step];
    }
    for (int d : x.denom_exps()) {
        const std::size_t step = static_cast<std::size_t>(d);
        for (std::size_t i = step; i < len; ++i)
            c[i] += c[i - step];
    }
    return PowerSeries(x.shift(), std::move(c));
}

} // namespace thetachi
