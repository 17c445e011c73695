#pragma once

// Action of elements on finitely supported vectors of l2(Z+).

#include <toeplitz/element.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace toeplitz {

/// The basis function e_index.
struct BasisVector {
    std::int64_t index = 0;

    explicit BasisVector(std::int64_t i) : index(i) {
        if (i < 0) throw std::invalid_argument("basis index must be nonnegative");
    }
    friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

/// Finite combination of basis vectors, canonical (no zero coefficients).
class SparseVector {
   public:
    using Entries = std::map<std::int64_t, ExactScalar>;

    SparseVector() = default;
    SparseVector(BasisVector e, ExactScalar c = ExactScalar(1)) { add(e.index, std::move(c)); }  // NOLINT

    void add(std::int64_t i, ExactScalar c) {
        if (i < 0) throw std::invalid_argument("basis index must be nonnegative");
        if (c.is_zero()) return;
        auto [it, inserted] = entries_.try_emplace(i, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    const Entries& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    ExactScalar operator[](std::int64_t i) const {
        auto it = entries_.find(i);
        return it == entries_.end() ? ExactScalar{} : it->second;
    }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

   private:
    Entries entries_;
};

/// T(n,m) e_j = e_{j-m+n} when j >= m, and 0 otherwise.
inline std::optional<std::int64_t> apply_monomial(Monomial a, std::int64_t j) {
    if (j < a.m) return std::nullopt;
    return j - a.m + a.n;
}

inline SparseVector apply(const Element& a, const SparseVector& v) {
    SparseVector out;
    for (const auto& [m, c] : a.terms())
        for (const auto& [j, x] : v.entries())
            if (auto target = apply_monomial(m, j)) out.add(*target, c * x);
    return out;
}

inline SparseVector apply(const Element& a, BasisVector e) { return apply(a, SparseVector(e)); }

inline std::string to_string(const SparseVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : v.entries()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")e" + std::to_string(i);
    }
    return out;
}

}  // namespace toeplitz
