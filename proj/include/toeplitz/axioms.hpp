#pragma once

// Deterministic property sweep over the algebraic laws. Case c of property p
// draws from RandomSource(derive_seed(derive_seed(seed, p), c)), so any single
// case can be replayed and the report is identical for identical arguments.

#include <toeplitz/circle_measure.hpp>
#include <toeplitz/coalgebra.hpp>
#include <toeplitz/compact.hpp>
#include <toeplitz/element.hpp>
#include <toeplitz/expr.hpp>
#include <toeplitz/functional.hpp>
#include <toeplitz/numerics.hpp>
#include <toeplitz/random.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toeplitz {

struct AxiomResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<std::size_t> first_failing_case;
    std::string counterexample;
    bool passed() const noexcept { return failures == 0; }
};

struct AxiomReport {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::vector<AxiomResult> results;
    bool passed() const {
        for (const auto& r : results)
            if (!r.passed()) return false;
        return true;
    }
};

namespace detail {

/// A property returns an empty string on success, otherwise a description of the case.
using Property = std::function<std::string(RandomSource&)>;

inline std::string check(bool ok, const std::string& what) { return ok ? std::string() : what; }

inline CircleMeasure quarter_turn_measure(RandomSource& rng) {
    CircleMeasure mu;
    for (std::int64_t a = rng.uniform(0, 3); a > 0; --a)
        mu.add_atom(make_rational(rng.uniform(0, 3), 4), rng.nonzero_coefficient());
    for (std::int64_t c = rng.uniform(0, 2); c > 0; --c) mu.add_density(rng.uniform(-3, 3), rng.coefficient());
    return mu;
}

inline Functional index_functional(RandomSource& rng) {
    std::map<std::int64_t, Scalar> values;
    for (std::int64_t k = -10; k <= 10; ++k) values[k] = rng.coefficient();
    return {[values](Monomial m) { return values.at(index(m)); }, FunctionalKind::table, true};
}

inline std::vector<std::pair<std::string, Property>> properties() {
    auto el = [](RandomSource& rng) { return rng.element(static_cast<std::size_t>(rng.uniform(0, 6))); };
    std::vector<std::pair<std::string, Property>> ps;
    ps.emplace_back("inverse_semigroup", [](RandomSource& rng) {
        auto a = rng.monomial(20);
        return check(mul_monomial(mul_monomial(a, swap(a)), a) == a, to_string(a));
    });
    ps.emplace_back("associativity", [el](RandomSource& rng) {
        auto a = el(rng), b = el(rng), c = el(rng);
        return check(mul(mul(a, b), c) == mul(a, mul(b, c)), to_string(a) + " | " + to_string(b) + " | " + to_string(c));
    });
    ps.emplace_back("unit", [el](RandomSource& rng) {
        auto a = el(rng);
        return check(mul(Element::identity(), a) == a && mul(a, Element::identity()) == a, to_string(a));
    });
    ps.emplace_back("adjoint_antimultiplicative", [el](RandomSource& rng) {
        auto a = el(rng), b = el(rng);
        return check(adjoint(mul(a, b)) == mul(adjoint(b), adjoint(a)), to_string(a) + " | " + to_string(b));
    });
    ps.emplace_back("antipode_antimultiplicative", [el](RandomSource& rng) {
        auto a = el(rng), b = el(rng);
        return check(antipode(mul(a, b)) == mul(antipode(b), antipode(a)), to_string(a) + " | " + to_string(b));
    });
    ps.emplace_back("index_additive", [](RandomSource& rng) {
        auto a = rng.monomial(), b = rng.monomial();
        return check(index(mul_monomial(a, b)) == index(a) + index(b), to_string(a) + " | " + to_string(b));
    });
    ps.emplace_back("cauchy_product", [el](RandomSource& rng) {
        auto a = el(rng), b = el(rng);
        auto ab = mul(a, b);
        auto ga = graded_components(a);
        for (std::int64_t k = -20; k <= 20; ++k) {
            Element sum;
            for (const auto& [n, x] : ga) sum += mul(x, graded_component(b, k - n));
            if (!(graded_component(ab, k) == sum)) return to_string(a) + " | " + to_string(b);
        }
        return std::string();
    });
    ps.emplace_back("compact_iff_finite_rank", [el](RandomSource& rng) {
        auto a = rng.uniform(0, 1) ? rng.compact_element(2) : el(rng);
        return check(is_compact(a) == finite_rank_oracle(a), to_string(a));
    });
    ps.emplace_back("symbol_multiplicative", [el](RandomSource& rng) {
        auto a = el(rng), b = el(rng);
        return check(symbol(mul(a, b)) == symbol(a) * symbol(b), to_string(a) + " | " + to_string(b));
    });
    ps.emplace_back("coassociativity", [el](RandomSource& rng) {
        auto a = el(rng);
        return check(delta_at(delta(a), 0) == delta_at(delta(a), 1), to_string(a));
    });
    ps.emplace_back("cocommutativity", [el](RandomSource& rng) {
        auto a = el(rng);
        return check(flip(delta(a)) == delta(a), to_string(a));
    });
    ps.emplace_back("delta_homomorphism", [el](RandomSource& rng) {
        auto a = el(rng), b = el(rng);
        return check(delta(mul(a, b)) == tensor_mul(delta(a), delta(b)) && delta(adjoint(a)) == adjoint(delta(a)),
                     to_string(a) + " | " + to_string(b));
    });
    ps.emplace_back("weak_hopf", [](RandomSource& rng) {
        auto a = rng.element(10);
        return check(weak_hopf_check(a), to_string(a));
    });
    ps.emplace_back("counit_is_unit", [](RandomSource& rng) {
        auto rho = index_functional(rng);
        return check(rule_equal(counit() * rho, rho, 8) && rule_equal(rho * counit(), rho, 8), "index functional");
    });
    ps.emplace_back("haar_absorption", [](RandomSource& rng) {
        auto rho = index_functional(rng);
        return check(satisfies_absorption(haar(), {rho}, 8), "index functional");
    });
    ps.emplace_back("measure_intertwining", [](RandomSource& rng) {
        auto a = quarter_turn_measure(rng), b = quarter_turn_measure(rng);
        auto lhs = measure_to_functional(convolve_measures(a, b));
        auto rhs = convolve(measure_to_functional(a), measure_to_functional(b));
        return check(rule_equal(lhs, rhs, 8), "quarter-turn measures");
    });
    ps.emplace_back("parse_print_roundtrip", [el](RandomSource& rng) {
        auto a = el(rng);
        return check(expr::parse_element(to_string(a)) == a, to_string(a));
    });
    return ps;
}

}  // namespace detail

inline AxiomReport run_axioms(std::uint64_t seed, std::size_t cases) {
    AxiomReport report;
    report.seed = seed;
    report.cases = cases;
    auto props = detail::properties();
    for (std::size_t p = 0; p < props.size(); ++p) {
        AxiomResult r;
        r.name = props[p].first;
        r.cases = cases;
        const auto property_seed = derive_seed(seed, p);
        for (std::size_t c = 0; c < cases; ++c) {
            RandomSource rng(derive_seed(property_seed, c));
            auto failure = props[p].second(rng);
            if (failure.empty()) continue;
            if (r.failures++ == 0) {
                r.first_failing_case = c;
                r.counterexample = failure;
            }
        }
        report.results.push_back(std::move(r));
    }
    return report;
}

}  // namespace toeplitz
