#pragma once

// The index-zero part: elements sum_k beta_k T(k,k) act diagonally on the
// basis, with eigenvalue on e_m equal to alpha_m = beta_0 + ... + beta_m.
// alpha is constant from the largest support index onwards.

#include <toeplitz/element.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace toeplitz {

class NotDiagonal : public std::domain_error {
   public:
    explicit NotDiagonal(Monomial offender)
        : std::domain_error("element has a term of nonzero index: " + to_string(offender)), offender_(offender) {}
    Monomial offender() const noexcept { return offender_; }

   private:
    Monomial offender_;
};

inline bool is_diagonal(const Element& a) {
    for (const auto& [m, c] : a.terms())
        if (index(m) != 0) return false;
    return true;
}

inline void require_diagonal(const Element& a) {
    for (const auto& [m, c] : a.terms())
        if (index(m) != 0) throw NotDiagonal(m);
}

/// Gelfand transform at m: the eigenvalue of a on e_m.
inline ExactScalar gelfand_transform_T0(const Element& a, std::int64_t m) {
    require_diagonal(a);
    if (m < 0) throw std::invalid_argument("gelfand transform is defined on nonnegative integers");
    ExactScalar sum;
    for (const auto& [mono, c] : a.terms()) {
        if (mono.n > m) break;  // terms are ordered by n
        sum += c;
    }
    return sum;
}

/// alpha_0 .. alpha_{count-1}. Converts beta-coordinates to eigenvalues.
inline std::vector<ExactScalar> diagonal_values(const Element& a, std::size_t count) {
    require_diagonal(a);
    std::vector<ExactScalar> alphas(count);
    ExactScalar running;
    auto it = a.terms().begin();
    for (std::size_t j = 0; j < count; ++j) {
        while (it != a.terms().end() && it->first.n == static_cast<std::int64_t>(j)) {
            running += it->second;
            ++it;
        }
        alphas[j] = running;
    }
    return alphas;
}

/// Inverse of diagonal_values: the element whose eigenvalues are alphas, with the
/// last value held constant beyond the end (beta_0 = alpha_0, beta_{n+1} = alpha_{n+1} - alpha_n).
inline Element from_diagonal_values(const std::vector<ExactScalar>& alphas) {
    Element a;
    ExactScalar previous;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        auto k = static_cast<std::int64_t>(j);
        a.add_term(Monomial{k, k}, alphas[j] - previous);
        previous = alphas[j];
    }
    return a;
}

struct DiagonalNorm {
    Rational squared;  // exact max |alpha_m|^2
    double value = 0;  // its square root
};

/// sup_m |alpha_m|, attained among m <= max support since alpha is eventually constant.
inline DiagonalNorm norm_T0(const Element& a) {
    require_diagonal(a);
    DiagonalNorm out{Rational(0), 0.0};
    auto alphas = diagonal_values(a, static_cast<std::size_t>(a.max_entry()) + 1);
    for (const auto& alpha : alphas)
        if (alpha.norm2() > out.squared) out.squared = alpha.norm2();
    out.value = std::sqrt(to_double(out.squared));
    return out;
}

}  // namespace toeplitz
