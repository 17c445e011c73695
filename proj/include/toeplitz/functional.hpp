#pragma once

// Functionals are determined on finite combinations by their values on the
// monomials (the "rule"). Delta is diagonal on monomials, so convolution
// (f * g)(A) = (f (x) g)(Delta A) is the pointwise product of rules.

#include <toeplitz/element.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toeplitz {

class CircleMeasure;

class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

enum class FunctionalKind { counit, haar, haar0, diagonal_state, table, measure_induced, product };

inline const char* to_string(FunctionalKind k) {
    switch (k) {
        case FunctionalKind::counit: return "counit";
        case FunctionalKind::haar: return "haar";
        case FunctionalKind::haar0: return "haar0";
        case FunctionalKind::diagonal_state: return "diagonal-state";
        case FunctionalKind::table: return "table";
        case FunctionalKind::measure_induced: return "measure-induced";
        case FunctionalKind::product: return "product";
    }
    return "?";
}

class Functional {
   public:
    using Rule = std::function<Scalar(Monomial)>;

    Functional(Rule rule, FunctionalKind kind, std::optional<bool> k_perp = std::nullopt,
               std::shared_ptr<const CircleMeasure> source = nullptr)
        : rule_(std::move(rule)), kind_(kind), k_perp_(k_perp), source_(std::move(source)) {}

    Scalar operator()(Monomial m) const { return rule_(m); }
    Scalar operator()(std::int64_t n, std::int64_t m) const { return rule_(Monomial{n, m}); }

    FunctionalKind kind() const noexcept { return kind_; }
    /// Known membership in the annihilator of the compacts, when it is known by construction.
    std::optional<bool> k_perp() const noexcept { return k_perp_; }
    /// The measure this functional was induced from, if any.
    const std::shared_ptr<const CircleMeasure>& source_measure() const noexcept { return source_; }

   private:
    Rule rule_;
    FunctionalKind kind_;
    std::optional<bool> k_perp_;
    std::shared_ptr<const CircleMeasure> source_;
};

inline Scalar evaluate(const Functional& f, const Element& a) {
    Scalar total;
    for (const auto& [m, c] : a.terms()) total += Scalar(c) * f(m);
    return total;
}

inline Functional convolve(const Functional& f, const Functional& g) {
    std::optional<bool> k_perp;
    if (f.k_perp().value_or(false) && g.k_perp().value_or(false)) k_perp = true;
    return {[f, g](Monomial m) { return f(m) * g(m); }, FunctionalKind::product, k_perp};
}

inline Functional operator*(const Functional& f, const Functional& g) { return convolve(f, g); }

/// epsilon(T(n,m)) = 1: the unit for convolution.
inline Functional counit() {
    return {[](Monomial) { return Scalar(1); }, FunctionalKind::counit, true};
}

/// h(T(n,m)) = 1 iff n = m = 0, i.e. h(A) = (A e_0, e_0).
inline Functional haar() {
    return {[](Monomial m) { return Scalar(m.n == 0 && m.m == 0 ? 1 : 0); }, FunctionalKind::haar, false};
}

/// h0(T(n,m)) = 1 iff n = m.
inline Functional haar0() {
    return {[](Monomial m) { return Scalar(m.n == m.m ? 1 : 0); }, FunctionalKind::haar0, true};
}

/// rho(A) = sum_k (1-q) q^k (A e_k, e_k), a faithful state with rho(T(n,n)) = q^n.
inline Functional diagonal_state(const Rational& q) {
    if (q <= 0 || q >= 1) throw DomainError("diagonal_state requires 0 < q < 1, got " + to_string(q));
    return {[q](Monomial m) {
                if (m.n != m.m) return Scalar(0);
                return Scalar(pow(ExactScalar(q), static_cast<std::uint64_t>(m.n)));
            },
            FunctionalKind::diagonal_state, false};
}

/// Finitely many prescribed values, `fallback` everywhere else.
inline Functional table_functional(std::map<Monomial, Scalar> values, Scalar fallback = Scalar(0)) {
    auto table = std::make_shared<const std::map<Monomial, Scalar>>(std::move(values));
    return {[table, fallback](Monomial m) {
                auto it = table->find(m);
                return it == table->end() ? fallback : it->second;
            },
            FunctionalKind::table};
}

/// Calls visit(Monomial) for every monomial with n, m <= depth.
template <class Visit>
void for_each_probe(std::int64_t depth, Visit&& visit) {
    for (std::int64_t n = 0; n <= depth; ++n)
        for (std::int64_t m = 0; m <= depth; ++m) visit(Monomial{n, m});
}

inline bool rule_equal(const Functional& f, const Functional& g, std::int64_t depth, double tol = 0.0) {
    bool equal = true;
    for_each_probe(depth, [&](Monomial m) {
        if (equal && !approx_equal(f(m), g(m), tol)) equal = false;
    });
    return equal;
}

inline double sup_on_grid(const Functional& f, std::int64_t depth) {
    double sup = 0;
    for_each_probe(depth, [&](Monomial m) { sup = std::max(sup, f(m).abs()); });
    return sup;
}

/// Finite certificate that f(T(n,m)) depends only on m - n, for n, m <= depth.
inline bool in_k_perp(const Functional& f, std::int64_t depth) {
    if (depth < 1) throw std::invalid_argument("in_k_perp requires depth >= 1");
    std::map<std::int64_t, Scalar> by_index;
    bool ok = true;
    for_each_probe(depth, [&](Monomial m) {
        if (!ok) return;
        auto v = f(m);
        auto [it, inserted] = by_index.try_emplace(index(m), v);
        if (!inserted && !(it->second == v)) ok = false;
    });
    return ok;
}

struct HaarCheck {
    bool normalized = false;             // f(T(0,0)) = 1
    bool vanishes_off_identity = false;  // f(T(n,m)) = 0 for 0 < max(n,m) <= depth
    bool absorbs = false;                // f * rho = rho * f = rho(T(0,0)) f for every probe
    std::optional<Monomial> first_failure;
    std::vector<Scalar> lambdas;  // rho(T(0,0)) per probe
    bool holds() const noexcept { return normalized && vanishes_off_identity && absorbs; }
};

/// Checks both the value characterization and the absorption identity on the probe grid.
inline HaarCheck is_haar_report(const Functional& f, const std::vector<Functional>& probes, std::int64_t depth,
                                double tol = 1e-12) {
    if (depth < 1) throw std::invalid_argument("is_haar requires depth >= 1");
    HaarCheck r;
    r.normalized = f(Monomial::identity()) == Scalar(1);
    if (!r.normalized) r.first_failure = Monomial::identity();
    r.vanishes_off_identity = true;
    for_each_probe(depth, [&](Monomial m) {
        if (!r.vanishes_off_identity || (m.n == 0 && m.m == 0)) return;
        if (!f(m).is_zero()) {
            r.vanishes_off_identity = false;
            if (!r.first_failure) r.first_failure = m;
        }
    });
    r.absorbs = true;
    for (const auto& rho : probes) {
        Scalar lambda = rho(Monomial::identity());
        r.lambdas.push_back(lambda);
        auto left = convolve(f, rho);
        auto right = convolve(rho, f);
        for_each_probe(depth, [&](Monomial m) {
            if (!r.absorbs) return;
            Scalar expected = lambda * f(m);
            if (!approx_equal(left(m), expected, tol) || !approx_equal(right(m), expected, tol)) {
                r.absorbs = false;
                if (!r.first_failure) r.first_failure = m;
            }
        });
    }
    return r;
}

inline bool is_haar(const Functional& f, const std::vector<Functional>& probes, std::int64_t depth) {
    return is_haar_report(f, probes, depth).holds();
}

/// Absorption identity only: f * rho = rho * f = rho(T(0,0)) f on the grid.
inline bool satisfies_absorption(const Functional& f, const std::vector<Functional>& probes, std::int64_t depth,
                                 double tol = 1e-12) {
    return is_haar_report(f, probes, depth, tol).absorbs;
}

struct CesaroTable {
    std::int64_t steps = 0;
    std::int64_t depth = 0;
    std::map<Monomial, Scalar> values;
    double max_deviation = 0;  // max |rho_n - h| over the grid
    Scalar at(Monomial m) const { return values.at(m); }
};

/// rho_n = (1/n) sum_{k=1}^n rho^k, with rho^k the k-th convolution power
/// (pointwise power of the rule).
inline CesaroTable cesaro_iterate(const Functional& f, std::int64_t steps, std::int64_t probe_depth) {
    if (steps < 1) throw std::invalid_argument("cesaro_iterate requires steps >= 1");
    if (!(f(Monomial::identity()) == Scalar(1)))
        throw std::invalid_argument("cesaro_iterate requires a state (value 1 at the identity)");
    CesaroTable table;
    table.steps = steps;
    table.depth = probe_depth;
    auto h = haar();
    for_each_probe(probe_depth, [&](Monomial m) {
        Scalar r = f(m);
        Scalar sum, power(1);
        if (!r.is_zero()) {
            for (std::int64_t k = 1; k <= steps; ++k) {
                power *= r;
                sum += power;
            }
        }
        Scalar mean = sum / Scalar(steps);
        table.max_deviation = std::max(table.max_deviation, (mean - h(m)).abs());
        table.values.emplace(m, std::move(mean));
    });
    return table;
}

}  // namespace toeplitz
