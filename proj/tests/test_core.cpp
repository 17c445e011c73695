#include "oracle.hpp"
#include "printers.hpp"

#include <toeplitz/basis.hpp>
#include <toeplitz/compact.hpp>
#include <toeplitz/diagonal.hpp>
#include <toeplitz/element.hpp>
#include <toeplitz/random.hpp>

#include <gtest/gtest.h>

using namespace toeplitz;

namespace {

Element T(std::int64_t n, std::int64_t m) { return Element::monomial(n, m); }

ExactScalar q(std::int64_t p, std::int64_t d = 1) { return ExactScalar(make_rational(p, d)); }

}  // namespace

TEST(Monomial, RejectsNegativePowers) {
    EXPECT_THROW(Monomial(-1, 0), std::invalid_argument);
    EXPECT_THROW(Monomial(0, -3), std::invalid_argument);
}

TEST(Monomial, MultiplicationLaw) {
    EXPECT_EQ(mul_monomial({0, 1}, {1, 0}), Monomial(0, 0));  // T*T = I
    EXPECT_EQ(mul_monomial({1, 0}, {0, 1}), Monomial(1, 1));  // TT* is a projection
    EXPECT_EQ(mul_monomial({2, 3}, {1, 4}), Monomial(2, 6));
}

TEST(Monomial, MultiplicationLawMatchesShiftMatrices) {
    const std::int64_t n = 16;
    for (auto [a, b] : {std::pair{Monomial{2, 3}, Monomial{1, 4}}, std::pair{Monomial{0, 1}, Monomial{1, 0}},
                        std::pair{Monomial{3, 1}, Monomial{4, 2}}}) {
        auto lhs = oracle::product(oracle::compress(a, n), oracle::compress(b, n));
        auto rhs = oracle::compress(mul_monomial(a, b), n);
        std::int64_t guard = std::max({a.n, a.m, b.n, b.m, mul_monomial(a, b).n, mul_monomial(a, b).m});
        EXPECT_TRUE(oracle::corner_equal(lhs, rhs, n - guard)) << to_string(a) << " * " << to_string(b);
    }
}

TEST(Monomial, InverseSemigroupLaw) {
    for (std::int64_t n = 0; n <= 20; ++n)
        for (std::int64_t m = 0; m <= 20; ++m) {
            Monomial a{n, m};
            EXPECT_EQ(mul_monomial(mul_monomial(a, swap(a)), a), a);
            EXPECT_EQ(mul_monomial(mul_monomial(swap(a), a), swap(a)), swap(a));
        }
}

TEST(Monomial, ProjectionsFormACommutativeSemigroup) {
    for (std::int64_t n = 0; n <= 20; ++n)
        for (std::int64_t m = 0; m <= 20; ++m) {
            auto k = std::max(n, m);
            EXPECT_EQ(mul_monomial({n, n}, {m, m}), Monomial(k, k));
        }
}

TEST(Monomial, IndexIsAdditive) {
    EXPECT_EQ(index(Monomial{2, 5}), 3);
    EXPECT_EQ(index(Monomial{0, 0}), 0);
    for (std::int64_t n = 0; n <= 10; ++n)
        for (std::int64_t m = 0; m <= 10; ++m)
            for (std::int64_t k = 0; k <= 10; ++k)
                for (std::int64_t l = 0; l <= 10; ++l) {
                    Monomial a{n, m}, b{k, l};
                    ASSERT_EQ(index(mul_monomial(a, b)), index(a) + index(b));
                }
}

TEST(Element, CanonicalFormDropsZeros) {
    auto a = T(1, 1) + T(2, 0) - T(1, 1);
    EXPECT_EQ(a, T(2, 0));
    EXPECT_EQ(a.size(), 1u);
    EXPECT_TRUE((T(3, 3) - T(3, 3)).is_zero());
    EXPECT_EQ(Element(), q(0) * T(4, 1));
}

TEST(Element, MulExamples) {
    EXPECT_EQ(mul(T(0, 0) + T(1, 1), T(1, 0)), q(2) * T(1, 0));
    // T(2,1) T(1,2) = T(2,2), so the last two cross terms cancel.
    EXPECT_EQ(mul(T(1, 0) - T(2, 1), T(0, 1) - T(1, 2)), T(1, 1) - T(2, 2));
}

TEST(Element, MulMatchesShiftMatricesOnCorner) {
    const std::int64_t n = 16;
    auto a = T(1, 0) - T(2, 1);
    auto b = T(0, 1) - T(1, 2);
    auto lhs = oracle::product(oracle::compress(a, n), oracle::compress(b, n));
    auto rhs = oracle::compress(mul(a, b), n);
    EXPECT_TRUE(oracle::corner_equal(lhs, rhs, n - 3));

    RandomSource rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = rng.element(3, 4);
        auto y = rng.element(3, 4);
        auto xy = mul(x, y);
        std::int64_t guard = std::max({x.max_entry(), y.max_entry(), xy.max_entry()});
        EXPECT_TRUE(oracle::corner_equal(oracle::product(oracle::compress(x, n), oracle::compress(y, n)),
                                         oracle::compress(xy, n), n - guard));
    }
}

TEST(Element, IdentityAndAssociativity) {
    RandomSource rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = rng.element(6), b = rng.element(6), c = rng.element(6);
        EXPECT_EQ(mul(Element::identity(), a), a);
        EXPECT_EQ(mul(a, Element::identity()), a);
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        EXPECT_EQ(mul(a, b + c), mul(a, b) + mul(a, c));
    }
}

TEST(Element, Adjoint) {
    EXPECT_EQ(adjoint(T(2, 5)), T(5, 2));
    EXPECT_EQ(adjoint(ExactScalar(1, 1) * T(1, 0)), ExactScalar(1, -1) * T(0, 1));
    RandomSource rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = rng.element(5), b = rng.element(5);
        EXPECT_EQ(adjoint(adjoint(a)), a);
        EXPECT_EQ(adjoint(mul(a, b)), mul(adjoint(b), adjoint(a)));
        auto s = rng.coefficient();
        EXPECT_EQ(adjoint(s * a), s.conj() * adjoint(a));
    }
}

TEST(Element, Antipode) {
    EXPECT_EQ(antipode(T(3, 1)), T(1, 3));
    EXPECT_EQ(antipode(mul(T(0, 1), T(1, 0))), mul(antipode(T(1, 0)), antipode(T(0, 1))));
    EXPECT_EQ(antipode(mul(T(0, 1), T(1, 0))), Element::identity());
    // Linear, not conjugate-linear.
    EXPECT_EQ(antipode(ExactScalar::i() * T(2, 0)), ExactScalar::i() * T(0, 2));
    RandomSource rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = rng.element(5), b = rng.element(5);
        EXPECT_EQ(antipode(antipode(a)), a);
        EXPECT_EQ(antipode(mul(a, b)), mul(antipode(b), antipode(a)));
    }
}

TEST(Grading, ComponentExamples) {
    auto a = T(0, 0) + q(2) * T(0, 1) + q(3) * T(1, 1);
    EXPECT_EQ(graded_component(a, 0), T(0, 0) + q(3) * T(1, 1));
    EXPECT_EQ(graded_component(a, 1), q(2) * T(0, 1));
    EXPECT_TRUE(graded_component(a, 5).is_zero());
}

TEST(Grading, ComponentsSumToElement) {
    RandomSource rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = rng.element(8);
        Element total;
        for (std::int64_t k = -10; k <= 10; ++k) total += graded_component(a, k);
        EXPECT_EQ(total, a);
        Element again;
        for (const auto& [k, part] : graded_components(a)) again += part;
        EXPECT_EQ(again, a);
    }
}

TEST(Grading, ClosureAndCauchyProduct) {
    RandomSource rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = rng.element(6), b = rng.element(6);
        auto ga = graded_components(a), gb = graded_components(b);
        for (const auto& [k, x] : ga)
            for (const auto& [l, y] : gb) {
                auto xy = mul(x, y);
                for (const auto& [mono, c] : xy.terms()) ASSERT_EQ(index(mono), k + l);
            }
        auto ab = mul(a, b);
        for (std::int64_t k = -20; k <= 20; ++k) {
            Element cauchy;
            for (const auto& [n, x] : ga) cauchy += mul(x, graded_component(b, k - n));
            ASSERT_EQ(graded_component(ab, k), cauchy) << "k = " << k;
        }
    }
}

TEST(Basis, ApplyExamples) {
    EXPECT_TRUE(apply(T(0, 1), BasisVector(0)).is_zero());
    EXPECT_EQ(apply(T(1, 0), BasisVector(3)), SparseVector(BasisVector(4)));
    EXPECT_TRUE(apply(T(0, 0) - T(2, 2), BasisVector(5)).is_zero());
    EXPECT_EQ(apply(T(0, 0) - T(2, 2), BasisVector(1)), SparseVector(BasisVector(1)));
}

TEST(Basis, ApplyIsAModuleAction) {
    RandomSource rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = rng.element(4, 6), b = rng.element(4, 6);
        SparseVector v;
        for (int j = 0; j < 5; ++j) v.add(rng.uniform(0, 12), rng.coefficient());
        EXPECT_EQ(apply(mul(a, b), v), apply(a, apply(b, v)));
    }
}

TEST(Basis, RejectsNegativeIndex) { EXPECT_THROW(BasisVector(-1), std::invalid_argument); }

TEST(Gelfand, Examples) {
    auto a = T(0, 0) - q(2) * T(1, 1);
    EXPECT_EQ(gelfand_transform_T0(a, 0), q(1));
    EXPECT_EQ(gelfand_transform_T0(a, 1), q(-1));
    EXPECT_EQ(gelfand_transform_T0(a, 7), q(-1));
    for (std::int64_t m = 0; m < 10; ++m) EXPECT_EQ(gelfand_transform_T0(Element::identity(), m), q(1));
    EXPECT_EQ(gelfand_transform_T0(T(3, 3), 2), q(0));
    EXPECT_EQ(gelfand_transform_T0(T(3, 3), 3), q(1));
}

TEST(Gelfand, RejectsNonDiagonal) {
    EXPECT_THROW(gelfand_transform_T0(T(0, 0) + T(0, 1), 0), NotDiagonal);
    EXPECT_THROW(norm_T0(T(2, 1)), NotDiagonal);
    try {
        gelfand_transform_T0(T(1, 1) + T(3, 1), 0);
        FAIL();
    } catch (const NotDiagonal& e) {
        EXPECT_EQ(e.offender(), Monomial(3, 1));
    }
}

TEST(Gelfand, TransformIsTheEigenvalue) {
    RandomSource rng(7);
    const std::int64_t n = 14;
    for (int trial = 0; trial < 30; ++trial) {
        Element a;
        for (int t = 0; t < 5; ++t) {
            auto k = rng.uniform(0, 10);
            a.add_term({k, k}, rng.coefficient());
        }
        auto m = oracle::compress(a, n);
        auto alphas = diagonal_values(a, n);
        for (std::int64_t j = 0; j < n; ++j) {
            EXPECT_EQ(gelfand_transform_T0(a, j), m[j][j]);
            EXPECT_EQ(alphas[j], m[j][j]);
        }
        // Eventually constant from the largest support index.
        for (std::int64_t j = a.max_entry(); j < a.max_entry() + 10; ++j)
            EXPECT_EQ(gelfand_transform_T0(a, j), gelfand_transform_T0(a, a.max_entry()));
        EXPECT_EQ(from_diagonal_values(diagonal_values(a, a.max_entry() + 1)), a);
    }
}

TEST(Gelfand, NormExamples) {
    auto n1 = norm_T0(T(0, 0) - q(2) * T(1, 1));
    EXPECT_EQ(n1.squared, Rational(1));
    EXPECT_DOUBLE_EQ(n1.value, 1.0);
    EXPECT_DOUBLE_EQ(norm_T0(Element::identity()).value, 1.0);
    EXPECT_DOUBLE_EQ(norm_T0(q(3) * T(0, 0)).value, 3.0);
    // |1 + i| = sqrt(2), squared value stays exact.
    auto n2 = norm_T0(ExactScalar(1, 1) * T(2, 2));
    EXPECT_EQ(n2.squared, Rational(2));
    EXPECT_NEAR(n2.value, std::sqrt(2.0), 1e-15);
    EXPECT_EQ(norm_T0(Element()).squared, Rational(0));
}

TEST(Symbol, Examples) {
    auto s = symbol(T(0, 1) + T(1, 2));
    EXPECT_EQ(s.coefficients().size(), 1u);
    EXPECT_EQ(s[1], q(2));
    EXPECT_TRUE(symbol(T(0, 0) - T(1, 1)).is_zero());
    EXPECT_EQ(symbol(T(1, 0))[-1], q(1));
}

TEST(Symbol, IsMultiplicative) {
    RandomSource rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = rng.element(6), b = rng.element(6);
        EXPECT_EQ(symbol(mul(a, b)), symbol(a) * symbol(b));
        EXPECT_EQ(symbol(a + b), symbol(a) + symbol(b));
    }
}

TEST(Compactness, Examples) {
    EXPECT_TRUE(is_compact(T(0, 0) - T(1, 1)));
    EXPECT_FALSE(is_compact(T(0, 0)));
    EXPECT_TRUE(is_compact(T(0, 1) - T(1, 2)));
    EXPECT_TRUE(is_compact(Element()));
    EXPECT_FALSE(is_compact(T(0, 0) - T(1, 1) + T(3, 0)));
}

TEST(Compactness, AgreesWithSymbolKernel) {
    RandomSource rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = trial % 2 ? rng.compact_element(3) : rng.element(5);
        EXPECT_EQ(is_compact(a), symbol(a).is_zero());
        if (trial % 2) EXPECT_TRUE(is_compact(a));
    }
}

TEST(Compactness, CompactsFormAnIdeal) {
    RandomSource rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        auto k = rng.compact_element(2, 6);
        auto a = rng.element(4, 6);
        EXPECT_TRUE(is_compact(mul(a, k)));
        EXPECT_TRUE(is_compact(mul(k, a)));
        EXPECT_TRUE(is_compact(adjoint(k)));
    }
}

TEST(Printing, ElementFormat) {
    EXPECT_EQ(to_string(q(2) * T(0, 1)), "2*T(0,1)");
    EXPECT_EQ(to_string(T(0, 0) - q(2) * T(1, 1)), "T(0,0) - 2*T(1,1)");
    EXPECT_EQ(to_string(-T(1, 0)), "-T(1,0)");
    EXPECT_EQ(to_string(ExactScalar(make_rational(1, 2), Rational(-3)) * T(2, 0)), "(1/2 - 3i)*T(2,0)");
    EXPECT_EQ(to_string(ExactScalar::i() * T(0, 1)), "i*T(0,1)");
    EXPECT_EQ(to_string(Element()), "0");
}
