#pragma once

// Measures on the circle of the form (finite atomic part) + (trigonometric
// polynomial density against d theta / 2pi). The class is closed under
// convolution and its Fourier transform is computable term by term.
//
// Angles are exact fractions of a full turn. A character value e^{-ik theta}
// stays exact when it is a power of i (theta a multiple of a quarter turn after
// scaling by k) and is stored as a double-precision phase otherwise.

#include <toeplitz/functional.hpp>
#include <toeplitz/scalar.hpp>
#include <toeplitz/trig_polynomial.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

namespace toeplitz {

/// t - floor(t), in [0, 1).
inline Rational reduce_turn(const Rational& t) {
    BigInt num = numerator(t);
    BigInt den = denominator(t);
    BigInt q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return t - Rational(q);
}

/// e^{-2 pi i k t} for an angle t given in turns.
inline Scalar character(const Rational& turn, std::int64_t k) {
    Rational quarters = reduce_turn(turn * k) * 4;
    if (denominator(quarters) == 1) {
        switch (static_cast<int>(numerator(quarters))) {
            case 0: return ExactScalar(1);
            case 1: return ExactScalar(Rational(0), Rational(-1));
            case 2: return ExactScalar(-1);
            case 3: return ExactScalar(Rational(0), Rational(1));
        }
    }
    double phase = -2.0 * std::numbers::pi * to_double(reduce_turn(turn * k));
    return std::complex<double>(std::cos(phase), std::sin(phase));
}

class CircleMeasure {
   public:
    using Atoms = std::map<Rational, Scalar>;
    using Density = TrigPoly<Scalar>;

    CircleMeasure() = default;

    static CircleMeasure dirac(const Rational& turn, Scalar weight = Scalar(1)) {
        CircleMeasure m;
        m.add_atom(turn, std::move(weight));
        return m;
    }
    /// Normalized arc length: density 1.
    static CircleMeasure haar_measure() {
        CircleMeasure m;
        m.density_.add(0, Scalar(1));
        return m;
    }
    static CircleMeasure from_density(Density d) {
        CircleMeasure m;
        m.density_ = std::move(d);
        return m;
    }

    void add_atom(const Rational& turn, const Scalar& weight) {
        if (weight.is_zero()) return;
        auto [it, inserted] = atoms_.try_emplace(reduce_turn(turn), weight);
        if (!inserted) {
            it->second += weight;
            if (it->second.is_zero()) atoms_.erase(it);
        }
    }
    void add_density(std::int64_t k, const Scalar& c) { density_.add(k, c); }

    const Atoms& atoms() const noexcept { return atoms_; }
    const Density& density() const noexcept { return density_; }

    /// Every weight and density coefficient is in the exact tier.
    bool is_exact() const {
        for (const auto& [t, w] : atoms_)
            if (!w.is_exact()) return false;
        for (const auto& [k, c] : density_.coefficients())
            if (!c.is_exact()) return false;
        return true;
    }

    friend CircleMeasure operator+(CircleMeasure a, const CircleMeasure& b) {
        for (const auto& [t, w] : b.atoms_) a.add_atom(t, w);
        for (const auto& [k, c] : b.density_.coefficients()) a.add_density(k, c);
        return a;
    }
    friend CircleMeasure operator*(const Scalar& s, const CircleMeasure& a) {
        CircleMeasure r;
        for (const auto& [t, w] : a.atoms_) r.add_atom(t, s * w);
        for (const auto& [k, c] : a.density_.coefficients()) r.add_density(k, s * c);
        return r;
    }
    friend bool operator==(const CircleMeasure&, const CircleMeasure&) = default;

   private:
    Atoms atoms_;
    Density density_;
};

/// hat(mu)(k) = integral of e^{-ik theta} d mu.
inline Scalar fourier(const CircleMeasure& mu, std::int64_t k) {
    Scalar total = mu.density()[k];
    for (const auto& [turn, w] : mu.atoms()) total += w * character(turn, k);
    return total;
}

/// Formal combination sum_t c_t e^{-2 pi i t} of roots of unity, t a reduced turn.
/// Equality is equality in the group ring, which implies equality of values.
class PhaseSum {
   public:
    using Terms = std::map<Rational, ExactScalar>;

    void add(const Rational& turn, const ExactScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(reduce_turn(turn), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    const Terms& terms() const noexcept { return terms_; }

    std::complex<double> to_complex() const {
        std::complex<double> z = 0;
        for (const auto& [t, c] : terms_) z += c.to_complex() * std::polar(1.0, -2.0 * std::numbers::pi * to_double(t));
        return z;
    }

    friend PhaseSum operator*(const PhaseSum& a, const PhaseSum& b) {
        PhaseSum r;
        for (const auto& [s, c] : a.terms_)
            for (const auto& [t, d] : b.terms_) r.add(s + t, c * d);
        return r;
    }
    friend bool operator==(const PhaseSum&, const PhaseSum&) = default;

   private:
    Terms terms_;
};

/// hat(mu)(k) as a PhaseSum; needs every weight and coefficient in the exact tier.
inline PhaseSum fourier_phases(const CircleMeasure& mu, std::int64_t k) {
    if (!mu.is_exact()) throw std::invalid_argument("fourier_phases needs an exact measure");
    PhaseSum r;
    r.add(Rational(0), mu.density()[k].exact());
    for (const auto& [turn, w] : mu.atoms()) r.add(turn * k, w.exact());
    return r;
}

/// Convolution on the circle group: atoms add their angles, an atom rotates a
/// density (coefficient k picks up e^{-ik theta}), densities multiply their
/// Fourier coefficients.
inline CircleMeasure convolve_measures(const CircleMeasure& a, const CircleMeasure& b) {
    CircleMeasure r;
    for (const auto& [ta, wa] : a.atoms())
        for (const auto& [tb, wb] : b.atoms()) r.add_atom(ta + tb, wa * wb);
    auto rotate_into = [&r](const CircleMeasure::Atoms& atoms, const CircleMeasure::Density& density) {
        for (const auto& [t, w] : atoms)
            for (const auto& [k, c] : density.coefficients()) r.add_density(k, w * c * character(t, k));
    };
    rotate_into(a.atoms(), b.density());
    rotate_into(b.atoms(), a.density());
    for (const auto& [k, c] : a.density().coefficients()) {
        auto d = b.density()[k];
        if (!d.is_zero()) r.add_density(k, c * d);
    }
    return r;
}

/// The functional f(T(n,m)) = integral of e^{i(m-n)theta} d mu = hat(mu)(n - m).
inline Functional measure_to_functional(const CircleMeasure& mu) {
    auto source = std::make_shared<const CircleMeasure>(mu);
    return {[source](Monomial m) { return fourier(*source, m.n - m.m); }, FunctionalKind::measure_induced, true,
            source};
}

/// Inverse of measure_to_functional on its image.
inline const CircleMeasure& functional_to_measure(const Functional& f) {
    if (!f.source_measure())
        throw std::invalid_argument("functional was not induced by a represented measure");
    return *f.source_measure();
}

}  // namespace toeplitz
