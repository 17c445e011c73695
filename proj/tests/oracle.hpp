#pragma once

// Test-only exact matrix oracle. Compressions are assembled from powers of the
// N x N shift matrix, so nothing here goes through the monomial product law.

#include <toeplitz/element.hpp>

#include <cstdint>
#include <vector>

namespace oracle {

using toeplitz::ExactScalar;
using Matrix = std::vector<std::vector<ExactScalar>>;

inline Matrix zeros(std::int64_t n) { return Matrix(n, std::vector<ExactScalar>(n)); }

inline Matrix identity(std::int64_t n) {
    auto m = zeros(n);
    for (std::int64_t i = 0; i < n; ++i) m[i][i] = ExactScalar(1);
    return m;
}

/// S e_j = e_{j+1}, with e_{N-1} sent to 0.
inline Matrix shift(std::int64_t n) {
    auto m = zeros(n);
    for (std::int64_t j = 0; j + 1 < n; ++j) m[j + 1][j] = ExactScalar(1);
    return m;
}

inline Matrix transpose(const Matrix& a) {
    auto n = static_cast<std::int64_t>(a.size());
    auto t = zeros(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

inline Matrix product(const Matrix& a, const Matrix& b) {
    auto n = static_cast<std::int64_t>(a.size());
    auto c = zeros(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::int64_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline Matrix power(const Matrix& a, std::int64_t e) {
    auto r = identity(static_cast<std::int64_t>(a.size()));
    for (std::int64_t k = 0; k < e; ++k) r = product(r, a);
    return r;
}

/// Exact compression of T(n,m) = S^n (S^T)^m; S^T maps the window into itself.
inline Matrix compress(toeplitz::Monomial mono, std::int64_t n) {
    auto s = shift(n);
    return product(power(s, mono.n), power(transpose(s), mono.m));
}

inline Matrix compress(const toeplitz::Element& a, std::int64_t n) {
    auto out = zeros(n);
    for (const auto& [mono, c] : a.terms()) {
        auto m = compress(mono, n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j)
                if (!m[i][j].is_zero()) out[i][j] += c * m[i][j];
    }
    return out;
}

/// Leading keep x keep blocks agree exactly.
inline bool corner_equal(const Matrix& a, const Matrix& b, std::int64_t keep) {
    for (std::int64_t i = 0; i < keep; ++i)
        for (std::int64_t j = 0; j < keep; ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

}  // namespace oracle
