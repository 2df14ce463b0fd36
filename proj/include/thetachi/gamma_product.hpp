#pragma once

/**
 * @file gamma_product.hpp
 * @brief Symbolic products of Gamma values at positive rational arguments.
 *
 * A GammaProduct is prefactor * prod Gamma(x_i)^{e_i}. reduce() walks every
 * argument down into (0, 1] with Gamma(x) = (x-1) Gamma(x-1), moving the
 * rational multipliers into the prefactor. Factors are keyed by their exact
 * argument, so cancellation between equal fractional parts is a map lookup.
 *
 * The same machinery evaluates the closed form for chi(Theta) of a
 * non-singular spectral curve w^N + t_1(z) w^{N-1} + ... + t_N(z) = 0.
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "thetachi/error.hpp"
#include "thetachi/rational.hpp"

namespace thetachi {

class GammaProduct {
public:
    using FactorMap = std::map<Rational, std::int64_t>;

    GammaProduct() = default;
    explicit GammaProduct(Rational prefactor) : prefactor_(std::move(prefactor)) {}

    /// Gamma(arg)^exp as a product on its own.
    static GammaProduct gamma(const Rational& arg, std::int64_t exp = 1) {
        GammaProduct p;
        p.mul_gamma(arg, exp);
        return p;
    }

    /// Multiplies in Gamma(arg)^exp. Poles (arg <= 0) are rejected.
    GammaProduct& mul_gamma(const Rational& arg, std::int64_t exp = 1) {
        if (arg.sign() <= 0)
            throw Error(ErrorKind::invalid_argument, "Gamma argument must be positive, got " + arg.str());
        if (exp == 0)
            return *this;
        auto [it, inserted] = factors_.try_emplace(arg, 0);
        it->second += exp;
        if (it->second == 0)
            factors_.erase(it);
        return *this;
    }

    GammaProduct& mul_rational(const Rational& r) {
        prefactor_ *= r;
        return *this;
    }

    const Rational& prefactor() const { return prefactor_; }
    const FactorMap& factors() const { return factors_; }

    friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) {
        a.prefactor_ *= b.prefactor_;
        for (const auto& [arg, exp] : b.factors_)
            a.mul_gamma(arg, exp);
        return a;
    }

    GammaProduct inverse() const {
        GammaProduct r(Rational(1) / prefactor_);
        for (const auto& [arg, exp] : factors_)
            r.mul_gamma(arg, -exp);
        return r;
    }

    friend GammaProduct operator/(const GammaProduct& a, const GammaProduct& b) { return a * b.inverse(); }

    friend bool operator==(const GammaProduct&, const GammaProduct&) = default;

    /// e.g. "28/27 * G(1/3)^2 * G(2/3)^-1"
    std::string str() const {
        std::string out = prefactor_.str();
        for (const auto& [arg, exp] : factors_) {
            out += " * G(" + arg.str() + ")";
            if (exp != 1)
                out += "^" + std::to_string(exp);
        }
        return out;
    }

private:
    Rational prefactor_{1};
    FactorMap factors_;
};

/// Thrown by eval_exact when fractional Gamma factors survive reduction.
class IrrationalResidue : public Error {
public:
    explicit IrrationalResidue(GammaProduct residue)
        : Error(ErrorKind::irrational_residue, "surviving factors " + residue.str()), residue_(std::move(residue)) {}

    /// The fully reduced product, including the surviving factors.
    const GammaProduct& residue() const noexcept { return residue_; }

private:
    GammaProduct residue_;
};

/// Moves every argument into (0, 1); integer arguments vanish (Gamma(1) = 1).
/// The represented real value is unchanged.
inline GammaProduct reduce(const GammaProduct& x) {
    GammaProduct out(x.prefactor());
    for (const auto& [arg, exp] : x.factors()) {
        BigInt steps = arg.floor();
        Rational base = arg - Rational(steps);  // in [0, 1)
        if (base.is_zero()) {
            base = Rational(1);
            steps -= 1;
        }
        // Gamma(base + steps) = prod_{k=0}^{steps-1} (base + k) * Gamma(base)
        Rational multiplier(1);
        Rational term = base;
        for (BigInt k = 0; k < steps; ++k) {
            multiplier *= term;
            term += Rational(1);
        }
        out.mul_rational(pow(multiplier, exp));
        if (base != Rational(1))
            out.mul_gamma(base, exp);
    }
    return out;
}

/// Value of x as an exact rational; throws IrrationalResidue unless every
/// Gamma factor cancels or becomes integral under reduce().
inline Rational eval_exact(const GammaProduct& x) {
    GammaProduct r = reduce(x);
    if (!r.factors().empty())
        throw IrrationalResidue(std::move(r));
    return r.prefactor();
}

/// Degree data of a spectral curve w^N + t_1(z) w^{N-1} + ... + t_N(z) = 0
/// with deg t_j <= nj - 1.
class SpectralCurveParams {
public:
    SpectralCurveParams(std::int64_t N, std::int64_t n) : N_(N), n_(n) {
        if (N < 2 || n < 1)
            throw Error(ErrorKind::invalid_argument,
                        "spectral curve needs N >= 2 and n >= 1, got N=" + std::to_string(N) +
                            ", n=" + std::to_string(n));
        if (genus() <= 0)
            throw Error(ErrorKind::invalid_genus, "N=" + std::to_string(N) + ", n=" + std::to_string(n) +
                                                      " gives genus " + std::to_string(genus()));
    }

    std::int64_t N() const { return N_; }
    std::int64_t n() const { return n_; }

    /// (N-1)(Nn-2)/2; the product is always even.
    std::int64_t genus() const { return (N_ - 1) * (N_ * n_ - 2) / 2; }

private:
    std::int64_t N_;
    std::int64_t n_;
};

inline std::int64_t genus(const SpectralCurveParams& p) { return p.genus(); }

/// prod_{j=1}^{N-1} [Gamma(j(nN-1)/N) / Gamma(j/N)]^2. The fractional parts
/// of j(nN-1)/N are (N-j)/N, so this fragment alone is rational.
inline GammaProduct spectral_fractional_fragment(const SpectralCurveParams& p) {
    const std::int64_t N = p.N(), n = p.n();
    GammaProduct out;
    for (std::int64_t j = 1; j < N; ++j) {
        out.mul_gamma(Rational(BigInt(j * (n * N - 1)), BigInt(N)), 2);
        out.mul_gamma(Rational(BigInt(j), BigInt(N)), -2);
    }
    return out;
}

/// The full closed form
///   (-1)^{g-1} N^{N^2 n - 2N + 1} (Nn-1)^{N-1} Gamma(N)^2
///     * prod_{j=1}^{N-1} Gamma(j)/Gamma(nN+j) * [Gamma(j(nN-1)/N)/Gamma(j/N)]^2
/// as an unreduced GammaProduct.
inline GammaProduct spectral_gamma_product(const SpectralCurveParams& p) {
    const std::int64_t N = p.N(), n = p.n(), g = p.genus();
    Rational pre = pow(Rational(N), N * N * n - 2 * N + 1) * pow(Rational(N * n - 1), N - 1);
    if ((g - 1) % 2 != 0)
        pre = -pre;
    GammaProduct out(pre);
    out.mul_gamma(Rational(N), 2);
    for (std::int64_t j = 1; j < N; ++j) {
        out.mul_gamma(Rational(j), 1);
        out.mul_gamma(Rational(n * N + j), -1);
    }
    return out * spectral_fractional_fragment(p);
}

/// chi(Theta) for the Jacobian of a non-singular spectral curve.
inline Rational chi_theta_spectral(const SpectralCurveParams& p) {
    Rational value = eval_exact(spectral_gamma_product(p));
    if (!value.is_integer())
        throw Error(ErrorKind::irrational_residue, "non-integral chi(Theta) " + value.str());
    return value;
}

/// chi(Theta) = (-1)^{g-1} g! for a generic principally polarized abelian
/// variety of dimension g.
inline Rational chi_theta_generic(std::int64_t g) {
    if (g < 1)
        throw Error(ErrorKind::invalid_genus, "genus must be positive, got " + std::to_string(g));
    Rational f = factorial(g);
    return (g - 1) % 2 == 0 ? f : -f;
}

} // namespace thetachi
