#pragma once

/**
 * @file graded_ring.hpp
 * @brief Weighted-homogeneous polynomials over Q and a degreewise rank
 *        oracle for dim (A / (f_1, ..., f_k))_d.
 *
 * The oracle compares the true graded dimensions of the quotient with the
 * coefficients of ch(A)/ch(F). Equality in every degree characterizes a
 * regular sequence; the check here is truncated, so a CONSISTENT verdict
 * means "consistent up to degree T" and nothing stronger.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thetachi/error.hpp"
#include "thetachi/qchar.hpp"
#include "thetachi/rational.hpp"

namespace thetachi {

/// Dense exponent vector; compared lexicographically.
using Exponents = std::vector<int>;

inline std::int64_t weighted_degree(std::span<const int> weights, const Exponents& exps) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        d += static_cast<std::int64_t>(exps[i]) * weights[i];
    return d;
}

/// All exponent vectors of weighted degree exactly d, in ascending lex order.
inline std::vector<Exponents> monomials_of_degree(std::span<const int> weights, std::int64_t d) {
    for (int w : weights)
        if (w <= 0)
            throw Error(ErrorKind::invalid_argument, "variable weights must be positive");
    std::vector<Exponents> out;
    if (d < 0)
        return out;
    Exponents cur(weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t var, std::int64_t remaining) -> void {
        if (var + 1 == weights.size()) {
            if (remaining % weights[var] == 0) {
                cur[var] = static_cast<int>(remaining / weights[var]);
                out.push_back(cur);
            }
            return;
        }
        for (std::int64_t e = 0; e * weights[var] <= remaining; ++e) {
            cur[var] = static_cast<int>(e);
            self(self, var + 1, remaining - e * weights[var]);
        }
        cur[var] = 0;
    };
    if (weights.empty()) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

/// Sparse polynomial in a fixed number of variables; zero coefficients are
/// never stored.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static Polynomial monomial(Exponents exps, const Rational& c = Rational(1)) {
        Polynomial p(exps.size());
        p.add_term(std::move(exps), c);
        return p;
    }

    Polynomial& add_term(Exponents exps, const Rational& c) {
        if (exps.size() != nvars_)
            throw Error(ErrorKind::invalid_argument, "exponent vector has " + std::to_string(exps.size()) +
                                                         " entries, expected " + std::to_string(nvars_));
        for (int e : exps)
            if (e < 0)
                throw Error(ErrorKind::invalid_argument, "negative exponent");
        if (c.is_zero())
            return *this;
        auto [it, inserted] = terms_.try_emplace(std::move(exps), 0);
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
        return *this;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    /// Weighted degree if every monomial shares it, std::nullopt otherwise
    /// (including the zero polynomial).
    std::optional<std::int64_t> homogeneous_degree(std::span<const int> weights) const {
        std::optional<std::int64_t> deg;
        for (const auto& [exps, c] : terms_) {
            const std::int64_t d = weighted_degree(weights, exps);
            if (deg && *deg != d)
                return std::nullopt;
            deg = d;
        }
        return deg;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        a.check_compatible(b);
        for (const auto& [exps, c] : b.terms_)
            a.add_term(exps, c);
        return a;
    }

    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        a.check_compatible(b);
        for (const auto& [exps, c] : b.terms_)
            a.add_term(exps, -c);
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

    friend Polynomial operator*(const Rational& s, Polynomial p) {
        if (s.is_zero())
            return Polynomial(p.nvars_);
        for (auto& [exps, c] : p.terms_)
            c *= s;
        return p;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_compatible(const Polynomial& o) const {
        if (o.nvars_ != nvars_)
            throw Error(ErrorKind::invalid_argument, "polynomials live in different rings");
    }

    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t integer_matrix_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
            m[r][col] = 0;
        }
        prev_pivot = m[rank][col];
        ++rank;
    }
    return rank;
}

/// Rank over Q; each row is cleared of denominators before elimination.
inline std::size_t matrix_rank(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<BigInt>> ints;
    ints.reserve(m.size());
    for (const auto& row : m) {
        BigInt l = 1;
        for (const auto& x : row)
            l = boost::multiprecision::lcm(l, x.denominator());
        std::vector<BigInt> r;
        r.reserve(row.size());
        for (const auto& x : row)
            r.push_back(x.numerator() * (l / x.denominator()));
        ints.push_back(std::move(r));
    }
    return integer_matrix_rank(std::move(ints));
}

/// Variable weights together with weighted-homogeneous nonzero generators.
class WeightedSystem {
public:
    WeightedSystem(std::vector<int> weights, std::vector<Polynomial> generators)
        : weights_(std::move(weights)), generators_(std::move(generators)) {
        if (weights_.empty())
            throw Error(ErrorKind::invalid_argument, "system needs at least one variable");
        for (int w : weights_)
            if (w <= 0)
                throw Error(ErrorKind::invalid_argument, "variable weights must be positive, got " + std::to_string(w));
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const Polynomial& f = generators_[i];
            if (f.nvars() != weights_.size())
                throw Error(ErrorKind::invalid_argument, "generator " + std::to_string(i) + " has " +
                                                             std::to_string(f.nvars()) + " variables, expected " +
                                                             std::to_string(weights_.size()));
            if (f.is_zero())
                throw Error(ErrorKind::invalid_argument, "generator " + std::to_string(i) + " is zero");
            auto d = f.homogeneous_degree(weights_);
            if (!d)
                throw Error(ErrorKind::invalid_argument,
                            "generator " + std::to_string(i) + " is not homogeneous for the given weights");
            if (*d == 0)
                throw Error(ErrorKind::invalid_argument, "generator " + std::to_string(i) + " is a constant");
            degrees_.push_back(static_cast<int>(*d));
        }
    }

    /// Also checks each generator against a declared degree.
    WeightedSystem(std::vector<int> weights, std::vector<Polynomial> generators, std::span<const int> declared)
        : WeightedSystem(std::move(weights), std::move(generators)) {
        if (declared.size() != degrees_.size() || !std::equal(declared.begin(), declared.end(), degrees_.begin()))
            throw Error(ErrorKind::invalid_argument, "declared generator degrees do not match the monomials");
    }

    const std::vector<int>& weights() const { return weights_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    const std::vector<int>& generator_degrees() const { return degrees_; }

private:
    std::vector<int> weights_;
    std::vector<Polynomial> generators_;
    std::vector<int> degrees_;
};

/// dim of (f_1 A + ... + f_k A) in degree d.
inline std::size_t ideal_dim(const WeightedSystem& sys, std::int64_t d) {
    const auto basis = monomials_of_degree(sys.weights(), d);
    if (basis.empty())
        return 0;
    std::map<Exponents, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i)
        column.emplace(basis[i], i);

    std::vector<std::vector<Rational>> rows;
    for (std::size_t g = 0; g < sys.generators().size(); ++g) {
        const std::int64_t rest = d - sys.generator_degrees()[g];
        for (const auto& m : monomials_of_degree(sys.weights(), rest)) {
            std::vector<Rational> row(basis.size());
            for (const auto& [exps, c] : sys.generators()[g].terms()) {
                Exponents e(exps);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += m[i];
                row[column.at(e)] += c;
            }
            rows.push_back(std::move(row));
        }
    }
    return matrix_rank(rows);
}

/// dim (A/I)_d for 0 <= d < up_to.
inline std::vector<std::int64_t> quotient_dims(const WeightedSystem& sys, std::int64_t up_to) {
    if (up_to < 1)
        throw Error(ErrorKind::invalid_argument, "truncation degree must be at least 1");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 0; d < up_to; ++d) {
        const auto total = static_cast<std::int64_t>(monomials_of_degree(sys.weights(), d).size());
        out.push_back(total - static_cast<std::int64_t>(ideal_dim(sys, d)));
    }
    return out;
}

enum class Prop1Verdict { consistent, not_regular };

inline std::string_view to_string(Prop1Verdict v) {
    return v == Prop1Verdict::consistent ? "CONSISTENT" : "NOT_REGULAR";
}

struct Prop1Report {
    std::int64_t max_degree = 0;
    /// Coefficients of ch(A)/ch(F), clamped below at zero.
    std::vector<std::int64_t> predicted;
    std::vector<std::int64_t> computed;
    std::optional<std::int64_t> first_mismatch;
    Prop1Verdict verdict = Prop1Verdict::consistent;

    friend bool operator==(const Prop1Report&, const Prop1Report&) = default;
};

/// Compares dim (A/I)_d with the product-form prediction for d < up_to.
inline Prop1Report verify_prop1(const WeightedSystem& sys, std::int64_t up_to) {
    if (up_to < 1)
        throw Error(ErrorKind::invalid_argument, "truncation degree must be at least 1");
    Prop1Report report;
    report.max_degree = up_to;
    // More generators than variables cannot be regular; the prediction is
    // still well defined in product form.
    const PowerSeries series =
        expand(char_poly_ring(sys.weights()) / free_char(sys.generator_degrees()), up_to);
    for (std::int64_t d = 0; d < up_to; ++d) {
        const BigInt c = series.coefficient(d);
        report.predicted.push_back(c < 0 ? 0 : static_cast<std::int64_t>(c));
    }
    report.computed = quotient_dims(sys, up_to);
    for (std::int64_t d = 0; d < up_to; ++d)
        if (report.predicted[d] != report.computed[d]) {
            report.first_mismatch = d;
            report.verdict = Prop1Verdict::not_regular;
            break;
        }
    return report;
}

} // namespace thetachi
