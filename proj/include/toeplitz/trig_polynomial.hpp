#pragma once

#include <toeplitz/scalar.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace toeplitz {

/// Finite sum of c_k e^{ik theta}, canonical (zero coefficients dropped).
/// Coeff is ExactScalar for symbols and Scalar for measure densities.
template <class Coeff>
class TrigPoly {
   public:
    using Coefficients = std::map<std::int64_t, Coeff>;

    TrigPoly() = default;
    explicit TrigPoly(const Coefficients& cs) {
        for (const auto& [k, c] : cs) add(k, c);
    }

    void add(std::int64_t k, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    const Coefficients& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Coeff operator[](std::int64_t k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Coeff{} : it->second;
    }

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) {
        for (const auto& [k, c] : b.coeffs_) a.add(k, c);
        return a;
    }
    /// Product of functions on the circle: coefficients convolve.
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
        TrigPoly r;
        for (const auto& [k, x] : a.coeffs_)
            for (const auto& [l, y] : b.coeffs_) r.add(k + l, x * y);
        return r;
    }
    friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

   private:
    Coefficients coeffs_;
};

using TrigPolynomial = TrigPoly<ExactScalar>;

template <class Coeff>
std::string to_string(const TrigPoly<Coeff>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : p.coefficients()) {
        if (!out.empty()) out += " + ";
        std::string coeff = "(" + to_string(c) + ")";
        if (k == 0) {
            out += coeff;
            continue;
        }
        if (coeff != "(1)") out += coeff + "*";
        std::string power = k == 1 ? "" : k == -1 ? "-" : std::to_string(k);
        out += "e^{" + power + "i theta}";
    }
    return out;
}

}  // namespace toeplitz
