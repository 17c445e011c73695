#include "printers.hpp"

#include <toeplitz/circle_measure.hpp>
#include <toeplitz/measure_syntax.hpp>
#include <toeplitz/random.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace toeplitz;

namespace {

Rational r(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }
Scalar s(std::int64_t p, std::int64_t d = 1) { return ExactScalar(r(p, d)); }

/// Random measure: up to three atoms at multiples of 1/denominator plus a short density.
CircleMeasure random_measure(RandomSource& rng, std::int64_t denominator) {
    CircleMeasure mu;
    auto atoms = rng.uniform(0, 3);
    for (std::int64_t a = 0; a < atoms; ++a)
        mu.add_atom(r(rng.uniform(0, denominator - 1), denominator), rng.nonzero_coefficient());
    auto coeffs = rng.uniform(0, 3);
    for (std::int64_t c = 0; c < coeffs; ++c) mu.add_density(rng.uniform(-4, 4), rng.nonzero_coefficient());
    return mu;
}

/// Direct numerical Fourier coefficient: atoms summed with std::polar, density by
/// its orthogonality relation.
std::complex<double> direct_fourier(const CircleMeasure& mu, std::int64_t k) {
    std::complex<double> total = mu.density()[k].to_complex();
    for (const auto& [turn, w] : mu.atoms())
        total += w.to_complex() * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) * to_double(turn));
    return total;
}

}  // namespace

TEST(Turns, Reduction) {
    EXPECT_EQ(reduce_turn(r(5, 4)), r(1, 4));
    EXPECT_EQ(reduce_turn(r(-1, 4)), r(3, 4));
    EXPECT_EQ(reduce_turn(r(-2)), r(0));
    EXPECT_EQ(reduce_turn(r(1, 3)), r(1, 3));
}

TEST(Turns, CharacterTiers) {
    EXPECT_EQ(character(r(1, 2), 1), s(-1));
    EXPECT_EQ(character(r(1, 4), 1), Scalar(ExactScalar(r(0), r(-1))));
    EXPECT_EQ(character(r(1, 4), 3), Scalar(ExactScalar::i()));
    EXPECT_TRUE(character(r(1, 8), 2).is_exact());
    auto c = character(r(1, 3), 1);
    EXPECT_FALSE(c.is_exact());
    EXPECT_NEAR(std::abs(c.to_complex() - std::polar(1.0, -2.0 * std::numbers::pi / 3)), 0.0, 1e-15);
}

TEST(Measure, AtomsAreReducedAndMerged) {
    auto mu = CircleMeasure::dirac(r(5, 4)) + CircleMeasure::dirac(r(1, 4), s(2));
    ASSERT_EQ(mu.atoms().size(), 1u);
    EXPECT_EQ(mu.atoms().begin()->first, r(1, 4));
    EXPECT_EQ(mu.atoms().begin()->second, s(3));
    auto zero = CircleMeasure::dirac(r(1, 2)) + s(-1) * CircleMeasure::dirac(r(-1, 2));
    EXPECT_TRUE(zero.atoms().empty());
    EXPECT_TRUE(CircleMeasure::dirac(r(0), s(0)).atoms().empty());
}

TEST(Fourier, Examples) {
    EXPECT_EQ(fourier(CircleMeasure::haar_measure(), 0), s(1));
    EXPECT_EQ(fourier(CircleMeasure::haar_measure(), 3), s(0));
    EXPECT_EQ(fourier(CircleMeasure::dirac(r(1, 2)), 1), s(-1));
    EXPECT_EQ(fourier(CircleMeasure::dirac(r(0)), 7), s(1));
}

TEST(Fourier, MatchesDirectSummation) {
    RandomSource rng(40);
    for (int trial = 0; trial < 50; ++trial) {
        auto mu = random_measure(rng, 12);
        for (std::int64_t k = -16; k <= 16; ++k)
            EXPECT_NEAR(std::abs(fourier(mu, k).to_complex() - direct_fourier(mu, k)), 0.0, 1e-12);
    }
}

TEST(Convolution, Examples) {
    EXPECT_EQ(convolve_measures(CircleMeasure::dirac(r(1, 4)), CircleMeasure::dirac(r(1, 4))),
              CircleMeasure::dirac(r(1, 2)));
    RandomSource rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto mu = random_measure(rng, 4);
        EXPECT_EQ(convolve_measures(CircleMeasure::dirac(r(0)), mu), mu);
        EXPECT_EQ(convolve_measures(mu, CircleMeasure::dirac(r(0))), mu);
    }
    EXPECT_EQ(convolve_measures(CircleMeasure::haar_measure(), CircleMeasure::dirac(r(1, 4))),
              CircleMeasure::haar_measure());
    // Non-quarter rotation leaves the floating tier with value 1 at k = 0.
    auto rotated = convolve_measures(CircleMeasure::haar_measure(), CircleMeasure::dirac(r(1, 3)));
    EXPECT_TRUE(rotated.atoms().empty());
    EXPECT_TRUE(approx_equal(rotated.density()[0], s(1), 0.0));
}

TEST(Convolution, AtomRotatesDensity) {
    // (delta_t * f)(theta) = f(theta - t): the e^{ik theta} coefficient picks up e^{-2 pi i k t}.
    auto f = CircleMeasure::from_density(TrigPoly<Scalar>({{1, s(1)}, {2, s(3)}}));
    auto g = convolve_measures(CircleMeasure::dirac(r(1, 4)), f);
    EXPECT_EQ(g.density()[1], Scalar(ExactScalar(r(0), r(-1))));
    EXPECT_EQ(g.density()[2], s(-3));
}

TEST(Convolution, FourierTheoremExactOnQuarterTurns) {
    RandomSource rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_measure(rng, 4), b = random_measure(rng, 4);
        auto ab = convolve_measures(a, b);
        EXPECT_TRUE(ab.is_exact());
        for (std::int64_t k = -16; k <= 16; ++k) EXPECT_EQ(fourier(ab, k), fourier(a, k) * fourier(b, k));
    }
}

TEST(Convolution, FourierTheoremOnGeneralTurns) {
    RandomSource rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_measure(rng, 7), b = random_measure(rng, 10);
        auto ab = convolve_measures(a, b);
        for (std::int64_t k = -16; k <= 16; ++k)
            EXPECT_TRUE(approx_equal(fourier(ab, k), fourier(a, k) * fourier(b, k), 1e-12)) << "k = " << k;
    }
}

TEST(Convolution, CommutativeAndAssociativeOnQuarterTurns) {
    RandomSource rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_measure(rng, 4), b = random_measure(rng, 4), c = random_measure(rng, 4);
        EXPECT_EQ(convolve_measures(a, b), convolve_measures(b, a));
        EXPECT_EQ(convolve_measures(convolve_measures(a, b), c), convolve_measures(a, convolve_measures(b, c)));
    }
}

TEST(Correspondence, Examples) {
    EXPECT_TRUE(rule_equal(measure_to_functional(CircleMeasure::haar_measure()), haar0(), 32));
    EXPECT_TRUE(rule_equal(measure_to_functional(CircleMeasure::dirac(r(0))), counit(), 32));
    auto f = measure_to_functional(CircleMeasure::dirac(r(1, 4)));
    // f(T(n,m)) = integral of e^{i(m-n)theta}: T(0,1) -> e^{i pi/2} = i.
    EXPECT_EQ(f(0, 1), Scalar(ExactScalar::i()));
    EXPECT_EQ(f.kind(), FunctionalKind::measure_induced);
    EXPECT_EQ(f.k_perp(), std::optional<bool>(true));
}

TEST(Correspondence, IntertwinesConvolution) {
    RandomSource rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_measure(rng, 4), b = random_measure(rng, 4);
        auto lhs = measure_to_functional(convolve_measures(a, b));
        auto rhs = convolve(measure_to_functional(a), measure_to_functional(b));
        EXPECT_TRUE(rule_equal(lhs, rhs, 32));
        EXPECT_TRUE(in_k_perp(lhs, 32));
    }
}

TEST(Correspondence, IsLinear) {
    RandomSource rng(46);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_measure(rng, 8), b = random_measure(rng, 8);
        Scalar c = rng.coefficient();
        auto lhs = measure_to_functional(c * a + b);
        auto fa = measure_to_functional(a), fb = measure_to_functional(b);
        for_each_probe(8, [&](Monomial m) { EXPECT_TRUE(approx_equal(lhs(m), c * fa(m) + fb(m), 1e-12)); });
    }
}

TEST(Correspondence, HaarZeroAbsorbsInducedFunctionals) {
    RandomSource rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        auto rho = measure_to_functional(random_measure(rng, 6));
        auto lhs = haar0() * rho;
        for_each_probe(16, [&](Monomial m) { EXPECT_TRUE(approx_equal(lhs(m), rho(0, 0) * haar0()(m), 1e-12)); });
    }
}

TEST(Correspondence, InverseOnImage) {
    auto mu = CircleMeasure::dirac(r(1, 3), s(2)) + CircleMeasure::haar_measure();
    EXPECT_EQ(functional_to_measure(measure_to_functional(mu)), mu);
    EXPECT_THROW(functional_to_measure(haar0()), std::invalid_argument);
}

TEST(Syntax, ParsesLiterals) {
    auto mu = parse_measure("dirac(1/4) * 2 + density{0: 1, 3: 1/2i}");
    EXPECT_EQ(mu, CircleMeasure::dirac(r(1, 4), s(2)) +
                      CircleMeasure::from_density(TrigPoly<Scalar>(
                          {{0, s(1)}, {3, Scalar(ExactScalar(r(0), r(1, 2)))}})));
    EXPECT_EQ(parse_measure("haar"), CircleMeasure::haar_measure());
    EXPECT_EQ(parse_measure("-dirac(1/2)"), CircleMeasure::dirac(r(1, 2), s(-1)));
    EXPECT_EQ(parse_measure("(1 - i) * dirac(0)"), CircleMeasure::dirac(r(0), ExactScalar(r(1), r(-1))));
    EXPECT_EQ(parse_measure("dirac(3/2)"), CircleMeasure::dirac(r(1, 2)));
    EXPECT_EQ(parse_measure("density{}"), CircleMeasure());
    auto floating = parse_measure("dirac(0) * 0.5");
    EXPECT_FALSE(floating.is_exact());
}

TEST(Syntax, RoundTrip) {
    RandomSource rng(48);
    for (int trial = 0; trial < 100; ++trial) {
        auto mu = random_measure(rng, 9);
        EXPECT_EQ(parse_measure(to_string(mu)), mu) << to_string(mu);
    }
}

TEST(Syntax, Errors) {
    EXPECT_THROW(parse_measure("dirac(x)"), expr::SyntaxError);
    EXPECT_THROW(parse_measure("delta(0)"), expr::SyntaxError);
    EXPECT_THROW(parse_measure("haar haar"), expr::SyntaxError);
    EXPECT_THROW(parse_measure("density{1 2}"), expr::SyntaxError);
    EXPECT_THROW(parse_measure(""), expr::SyntaxError);
    try {
        parse_measure("haar + ");
        FAIL();
    } catch (const expr::SyntaxError& e) {
        EXPECT_EQ(e.offset(), 7u);
    }
}

TEST(Phases, AgreeWithFourierValues) {
    RandomSource rng(49);
    for (int trial = 0; trial < 50; ++trial) {
        auto mu = random_measure(rng, 12);
        for (std::int64_t k = -16; k <= 16; ++k)
            EXPECT_NEAR(std::abs(fourier_phases(mu, k).to_complex() - fourier(mu, k).to_complex()), 0.0, 1e-12);
    }
    EXPECT_THROW(fourier_phases(parse_measure("dirac(0) * 0.5"), 1), std::invalid_argument);
}

TEST(Phases, ConvolutionTheoremExactOnRationalTurns) {
    RandomSource rng(50);
    for (int trial = 0; trial < 100; ++trial) {
        CircleMeasure a, b;
        for (int t = 0; t < 3; ++t) {
            a.add_atom(r(rng.uniform(0, 11), 12), rng.nonzero_coefficient());
            b.add_atom(r(rng.uniform(0, 6), 7), rng.nonzero_coefficient());
        }
        auto ab = convolve_measures(a, b);
        for (std::int64_t k = -16; k <= 16; ++k)
            EXPECT_EQ(fourier_phases(ab, k), fourier_phases(a, k) * fourier_phases(b, k));
    }
}
