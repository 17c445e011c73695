#pragma once

// Seeded generators for property sweeps. Reductions are done by hand on top of
// mt19937_64 so a given seed produces the same stream on every standard library.
//
// Distribution: monomial entries uniform on [0, max_entry] (default 10);
// coefficients (p/q) + (r/s)i with p, r uniform on [-3, 3] and q, s on [1, 4].

#include <toeplitz/element.hpp>

#include <cstdint>
#include <random>

namespace toeplitz {

/// splitmix64 finalizer, used to derive independent per-case seeds.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    Monomial monomial(std::int64_t max_entry = 10) { return {uniform(0, max_entry), uniform(0, max_entry)}; }

    Rational small_rational() { return make_rational(uniform(-3, 3), uniform(1, 4)); }

    ExactScalar coefficient() { return {small_rational(), small_rational()}; }

    /// Coefficient drawn until nonzero.
    ExactScalar nonzero_coefficient() {
        ExactScalar c;
        while (c.is_zero()) c = coefficient();
        return c;
    }

    Element element(std::size_t terms, std::int64_t max_entry = 10) {
        Element a;
        for (std::size_t i = 0; i < terms; ++i) a.add_term(monomial(max_entry), coefficient());
        return a;
    }

    /// Element whose every index diagonal sums to zero, hence compact.
    Element compact_element(std::size_t diagonals, std::int64_t max_entry = 10) {
        Element a;
        for (std::size_t d = 0; d < diagonals; ++d) {
            std::int64_t k = uniform(-max_entry, max_entry);
            std::size_t len = static_cast<std::size_t>(uniform(2, 4));
            ExactScalar total;
            for (std::size_t i = 0; i + 1 < len; ++i) {
                auto c = coefficient();
                a.add_term(on_diagonal(k, max_entry), c);
                total += c;
            }
            a.add_term(on_diagonal(k, max_entry), -total);
        }
        return a;
    }

    std::mt19937_64& engine() noexcept { return engine_; }

   private:
    Monomial on_diagonal(std::int64_t k, std::int64_t max_entry) {
        std::int64_t lo = k < 0 ? -k : 0;
        std::int64_t hi = k < 0 ? max_entry : max_entry - k;
        std::int64_t n = uniform(lo, hi);
        return {n, n + k};
    }

    std::mt19937_64 engine_;
};

}  // namespace toeplitz
