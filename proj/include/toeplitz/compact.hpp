#pragma once

#include <toeplitz/element.hpp>
#include <toeplitz/trig_polynomial.hpp>

#include <map>

namespace toeplitz {

/// Image in C(S^1) modulo compacts: T(n,m) -> e^{i(m-n)theta}.
inline TrigPolynomial symbol(const Element& a) {
    TrigPolynomial p;
    for (const auto& [m, c] : a.terms()) p.add(index(m), c);
    return p;
}

/// Sum of coefficients along each index diagonal. An element is compact exactly
/// when all of these vanish.
inline std::map<std::int64_t, ExactScalar> diagonal_sums(const Element& a) {
    std::map<std::int64_t, ExactScalar> sums;
    for (const auto& [m, c] : a.terms()) sums[index(m)] += c;
    return sums;
}

inline bool is_compact(const Element& a) {
    for (const auto& [k, s] : diagonal_sums(a))
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace toeplitz
