#pragma once

// Normal-form arithmetic on the inverse semigroup {T(n,m) = T^n T*^m} and on
// the algebra of its finite linear combinations.

#include <toeplitz/scalar.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toeplitz {

/// T(n,m) = T^n T*^m, with T the unilateral right shift.
struct Monomial {
    std::int64_t n = 0;
    std::int64_t m = 0;

    constexpr Monomial() = default;
    constexpr Monomial(std::int64_t n_, std::int64_t m_) : n(n_), m(m_) {
        if (n_ < 0 || m_ < 0) throw std::invalid_argument("monomial powers must be nonnegative");
    }

    static constexpr Monomial identity() { return {0, 0}; }
    static constexpr Monomial shift() { return {1, 0}; }
    static constexpr Monomial coshift() { return {0, 1}; }

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Fredholm index of T(n,m), which is m - n.
constexpr std::int64_t index(Monomial a) noexcept { return a.m - a.n; }

/// The multiplication law of the semigroup:
///   T(n,m) T(k,l) = T(n+k-m, l)  if k > m
///                 = T(n, l+m-k)  if k < m
///                 = T(n, l)      if k = m
constexpr Monomial mul_monomial(Monomial a, Monomial b) {
    if (b.n > a.m) return {a.n + b.n - a.m, b.m};
    if (b.n < a.m) return {a.n, b.m + a.m - b.n};
    return {a.n, b.m};
}

/// Generalized inverse T(m,n) of T(n,m).
constexpr Monomial swap(Monomial a) noexcept { return Monomial{a.m, a.n}; }

inline std::string to_string(Monomial a) {
    return "T(" + std::to_string(a.n) + "," + std::to_string(a.m) + ")";
}

/// Finite linear combination of monomials with Gaussian-rational coefficients.
/// Always canonical: no zero coefficient is stored, so structural equality is
/// algebraic equality.
class Element {
   public:
    using Terms = std::map<Monomial, ExactScalar>;

    Element() = default;
    Element(Monomial m, ExactScalar c = ExactScalar(1)) {  // NOLINT: a monomial is an element
        add_term(m, std::move(c));
    }
    explicit Element(Terms terms) {
        for (auto& [m, c] : terms) add_term(m, std::move(c));
    }

    static Element monomial(std::int64_t n, std::int64_t m, ExactScalar c = ExactScalar(1)) {
        return Element(Monomial{n, m}, std::move(c));
    }
    static Element identity() { return Element(Monomial::identity()); }
    static Element scalar(ExactScalar c) { return Element(Monomial::identity(), std::move(c)); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    ExactScalar coefficient(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ExactScalar{} : it->second;
    }

    void add_term(Monomial m, ExactScalar c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Largest power of T or T* appearing in any term; 0 for the zero element.
    std::int64_t max_entry() const noexcept {
        std::int64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max({d, m.n, m.m});
        return d;
    }

    /// Largest |index| over the terms.
    std::int64_t spread() const noexcept {
        std::int64_t s = 0;
        for (const auto& [m, c] : terms_) s = std::max(s, index(m) < 0 ? -index(m) : index(m));
        return s;
    }

    Element operator-() const {
        Element r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Element& operator*=(const ExactScalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const ExactScalar& s, Element a) { return a *= s; }
    friend Element operator*(Element a, const ExactScalar& s) { return a *= s; }
    friend bool operator==(const Element&, const Element&) = default;

   private:
    Terms terms_;
};

/// Bilinear extension of the monomial law.
inline Element mul(const Element& a, const Element& b) {
    Element r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(mul_monomial(ma, mb), ca * cb);
    return r;
}

inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

inline Element pow(const Element& a, std::uint64_t exp) {
    Element result = Element::identity();
    for (std::uint64_t i = 0; i < exp; ++i) result = mul(result, a);
    return result;
}

/// Conjugate-linear involution: (c T(n,m))* = conj(c) T(m,n).
inline Element adjoint(const Element& a) {
    Element r;
    for (const auto& [m, c] : a.terms()) r.add_term(swap(m), c.conj());
    return r;
}

/// Weak antipode: linear (no conjugation) extension of T(n,m) -> T(m,n).
inline Element antipode(const Element& a) {
    Element r;
    for (const auto& [m, c] : a.terms()) r.add_term(swap(m), c);
    return r;
}

/// Sub-sum of the terms of index k, i.e. the component of a in the k-th graded piece.
inline Element graded_component(const Element& a, std::int64_t k) {
    Element r;
    for (const auto& [m, c] : a.terms())
        if (index(m) == k) r.add_term(m, c);
    return r;
}

/// All nonzero graded components, keyed by index.
inline std::map<std::int64_t, Element> graded_components(const Element& a) {
    std::map<std::int64_t, Element> out;
    for (const auto& [m, c] : a.terms()) out[index(m)].add_term(m, c);
    return out;
}

/// "2*T(0,1) - T(1,1) + (1 + i)*T(0,0)"; "0" for the zero element. The output is
/// accepted by the expression parser.
inline std::string to_string(const Element& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = c.re() < 0;
            Rational mag = abs(c.re());
            if (mag != 1) coeff = to_string(mag) + "*";
        } else if (c.re() == 0) {
            negative = c.im() < 0;
            coeff = to_string(ExactScalar(Rational(0), abs(c.im()))) + "*";
        } else {
            coeff = "(" + to_string(c) + ")*";
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += coeff + to_string(m);
        first = false;
    }
    return out;
}

}  // namespace toeplitz
