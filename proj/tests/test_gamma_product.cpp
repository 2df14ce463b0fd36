#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thetachi/gamma_product.hpp"

using namespace thetachi;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<std::pair<Rational, std::int64_t>> factor_list(const GammaProduct& p) {
    return {p.factors().begin(), p.factors().end()};
}

GammaProduct random_product(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 5), num(1, 60), den(1, 6), exp(-3, 3), pre(-20, 20);
    int p = 0;
    while (p == 0)
        p = pre(rng);
    GammaProduct out(Rational(BigInt(p), BigInt(den(rng))));
    for (int i = count(rng); i > 0; --i) {
        const int d = den(rng);
        // argument in (0, 10]
        const Rational arg(BigInt(std::uniform_int_distribution<int>(1, 10 * d)(rng)), BigInt(d));
        out.mul_gamma(arg, exp(rng));
    }
    return out;
}

} // namespace

TEST(SpectralParams, Genus) {
    EXPECT_EQ(genus(SpectralCurveParams(4, 1)), 3);
    EXPECT_EQ(genus(SpectralCurveParams(3, 2)), 4);
    for (int n = 2; n < 10; ++n)
        EXPECT_EQ(genus(SpectralCurveParams(2, n)), n - 1);
    try {
        SpectralCurveParams(2, 1);
        FAIL() << "genus 0 accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_genus);
    }
    EXPECT_THROW(SpectralCurveParams(1, 3), Error);
    EXPECT_THROW(SpectralCurveParams(3, 0), Error);
}

TEST(SpectralParams, GenusAlwaysIntegral) {
    for (int N = 2; N <= 50; ++N)
        for (int n = 1; n <= 50; ++n)
            ASSERT_EQ((N - 1) * (N * n - 2) % 2, 0) << N << " " << n;
}

TEST(GammaProduct, MergesAndDropsFactors) {
    GammaProduct p;
    p.mul_gamma(q("1/3"), 2).mul_gamma(q("1/3"), -2).mul_gamma(q("2/4"), 1).mul_gamma(q("1/2"), 1);
    ASSERT_EQ(p.factors().size(), 1u);
    EXPECT_EQ(p.factors().at(q("1/2")), 2);
    EXPECT_THROW(p.mul_gamma(Rational(0)), Error);
    EXPECT_THROW(p.mul_gamma(q("-1/2")), Error);
}

TEST(Reduce, Examples) {
    const GammaProduct a = reduce(GammaProduct::gamma(q("5/3")));
    EXPECT_EQ(a.prefactor(), q("2/3"));
    EXPECT_EQ(factor_list(a), (std::vector<std::pair<Rational, std::int64_t>>{{q("2/3"), 1}}));

    const GammaProduct b = reduce(GammaProduct::gamma(Rational(3)));
    EXPECT_EQ(b.prefactor(), Rational(2));
    EXPECT_TRUE(b.factors().empty());

    // Gamma(10/3) = (7/3)(4/3)(1/3) Gamma(1/3)
    const GammaProduct c = reduce(GammaProduct::gamma(q("10/3")));
    EXPECT_EQ(c.prefactor(), q("7/3") * q("4/3") * q("1/3"));
    EXPECT_EQ(c.prefactor(), q("28/27"));
    EXPECT_EQ(factor_list(c), (std::vector<std::pair<Rational, std::int64_t>>{{q("1/3"), 1}}));

    EXPECT_EQ(reduce(GammaProduct::gamma(Rational(1), 5)), GammaProduct());
}

TEST(Reduce, IsIdempotent) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        const GammaProduct r = reduce(random_product(rng));
        EXPECT_EQ(reduce(r), r);
        for (const auto& [arg, exp] : r.factors()) {
            EXPECT_GT(arg, Rational(0));
            EXPECT_LT(arg, Rational(1));
        }
    }
}

TEST(EvalExact, Examples) {
    EXPECT_EQ(eval_exact(GammaProduct::gamma(Rational(3), 2)), Rational(4));

    GammaProduct p;
    p.mul_gamma(q("3/4"), 1).mul_gamma(q("1/4"), -1).mul_gamma(q("9/4"), 1).mul_gamma(q("3/4"), -1);
    EXPECT_EQ(eval_exact(p), q("5/16"));

    try {
        eval_exact(GammaProduct::gamma(q("1/2")));
        FAIL() << "Gamma(1/2) is not rational";
    } catch (const IrrationalResidue& e) {
        EXPECT_EQ(e.kind(), ErrorKind::irrational_residue);
        EXPECT_EQ(factor_list(e.residue()), (std::vector<std::pair<Rational, std::int64_t>>{{q("1/2"), 1}}));
    }
}

TEST(GammaProductProperties, ReducePreservesValue) {
    std::mt19937 rng(6);
    for (int i = 0; i < 200; ++i) {
        const GammaProduct x = random_product(rng);
        const GammaProduct r = reduce(x);
        const auto before = oracle::log_gamma_product(x.prefactor(), factor_list(x));
        const auto after = oracle::log_gamma_product(r.prefactor(), factor_list(r));
        EXPECT_EQ(before.sign, after.sign);
        // relative error of the values = |exp(difference of logs) - 1|
        const oracle::Float rel = boost::multiprecision::abs(boost::multiprecision::expm1(before.log_abs - after.log_abs));
        EXPECT_LT(rel, oracle::Float("1e-6")) << x.str();
    }
}

TEST(GammaProductProperties, EvalExactStableUnderReduce) {
    std::mt19937 rng(7);
    int rational = 0;
    for (int i = 0; i < 300; ++i) {
        GammaProduct x = random_product(rng);
        // pair some factors with an integer shift of themselves so they cancel
        x = x / GammaProduct::gamma(Rational(3)) * GammaProduct::gamma(q("7/2")) / GammaProduct::gamma(q("1/2"));
        GammaProduct y = x;
        for (const auto& [arg, exp] : x.factors())
            y.mul_gamma(arg + Rational(2), -exp);
        try {
            const Rational v = eval_exact(y);
            EXPECT_EQ(eval_exact(reduce(y)), v);
            ++rational;
        } catch (const IrrationalResidue&) {
            ADD_FAILURE() << "shifted pairs must cancel: " << y.str();
        }
    }
    EXPECT_EQ(rational, 300);
}

TEST(ChiThetaSpectral, GenusThreeAndFourCurves) {
    EXPECT_EQ(chi_theta_spectral(SpectralCurveParams(4, 1)), Rational(6));
    EXPECT_EQ(chi_theta_spectral(SpectralCurveParams(3, 2)), Rational(-21));
}

TEST(ChiThetaSpectral, HyperellipticIsCatalan) {
    EXPECT_EQ(chi_theta_spectral(SpectralCurveParams(2, 2)), Rational(1));
    EXPECT_EQ(chi_theta_spectral(SpectralCurveParams(2, 3)), Rational(-2));
    for (int g = 1; g <= 20; ++g) {
        const Rational expected = g % 2 == 1 ? catalan(g) : -catalan(g);
        EXPECT_EQ(chi_theta_spectral(SpectralCurveParams(2, g + 1)), expected) << g;
    }
}

TEST(ChiThetaSpectral, AgreesWithDirectNumericEvaluation) {
    for (int N = 2; N <= 6; ++N)
        for (int n = 1; n <= 4; ++n) {
            if ((N - 1) * (N * n - 2) <= 0)
                continue;
            const Rational exact = chi_theta_spectral(SpectralCurveParams(N, n));
            const oracle::Float numeric = oracle::chi_theta_numeric(N, n);
            const oracle::Float rel = boost::multiprecision::abs(numeric / oracle::to_float(exact) - 1);
            EXPECT_LT(rel, oracle::Float("1e-30")) << N << " " << n;
        }
}

TEST(ChiThetaSpectral, IntegralWithAlternatingSign) {
    for (int N = 2; N <= 6; ++N)
        for (int n = 1; n <= 4; ++n) {
            if ((N - 1) * (N * n - 2) <= 0)
                continue;
            const SpectralCurveParams p(N, n);
            const Rational chi = chi_theta_spectral(p);
            EXPECT_TRUE(chi.is_integer());
            EXPECT_EQ(chi.sign(), p.genus() % 2 == 1 ? 1 : -1) << N << " " << n;
        }
}

TEST(ChiThetaSpectral, FractionalFragmentCancels) {
    for (auto [N, n] : {std::pair{4, 1}, std::pair{3, 2}, std::pair{6, 3}}) {
        const GammaProduct frag = spectral_fractional_fragment(SpectralCurveParams(N, n));
        EXPECT_FALSE(frag.factors().empty());
        EXPECT_NO_THROW(eval_exact(frag));
    }
}

TEST(ChiThetaGeneric, Values) {
    EXPECT_EQ(chi_theta_generic(1), Rational(1));
    EXPECT_EQ(chi_theta_generic(3), Rational(6));
    EXPECT_EQ(chi_theta_generic(4), Rational(-24));
    EXPECT_THROW(chi_theta_generic(0), Error);
    // The spectral genus-3 example is non-singular and matches the generic value;
    // the genus-4 example has a singular theta divisor and does not.
    EXPECT_EQ(chi_theta_spectral(SpectralCurveParams(4, 1)), chi_theta_generic(3));
    EXPECT_NE(chi_theta_spectral(SpectralCurveParams(3, 2)), chi_theta_generic(4));
}
