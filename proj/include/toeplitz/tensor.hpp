#pragma once

// Degree-2 and degree-3 tensors over finite combinations of monomials.

#include <toeplitz/basis.hpp>
#include <toeplitz/element.hpp>

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace toeplitz {

class DegreeMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

using MonomialTuple = std::vector<Monomial>;

class TensorElement {
   public:
    using Terms = std::map<MonomialTuple, ExactScalar>;

    explicit TensorElement(std::size_t degree) : degree_(degree) {
        if (degree < 2 || degree > 3) throw DegreeMismatch("tensor degree must be 2 or 3");
    }

    static TensorElement pure(std::initializer_list<Monomial> factors, ExactScalar c = ExactScalar(1)) {
        TensorElement t(factors.size());
        t.add_term(MonomialTuple(factors), std::move(c));
        return t;
    }

    std::size_t degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(MonomialTuple key, ExactScalar c) {
        if (key.size() != degree_) throw DegreeMismatch("tuple length differs from tensor degree");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        check_degree(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        check_degree(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    TensorElement& operator*=(const ExactScalar& s) {
        if (s.is_zero()) terms_.clear();
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    TensorElement operator-() const {
        TensorElement r(degree_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const ExactScalar& s, TensorElement a) { return a *= s; }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

   private:
    void check_degree(const TensorElement& o) const {
        if (o.degree_ != degree_) throw DegreeMismatch("tensor degrees differ");
    }

    std::size_t degree_;
    Terms terms_;
};

/// Componentwise product in the tensor power of the algebra.
inline TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch("tensor_mul: degrees differ");
    TensorElement r(a.degree());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            MonomialTuple key(ka.size());
            for (std::size_t i = 0; i < ka.size(); ++i) key[i] = mul_monomial(ka[i], kb[i]);
            r.add_term(std::move(key), ca * cb);
        }
    return r;
}

inline TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tensor_mul(a, b); }

/// a (x) b, where either side may already be a tensor; total degree at most 3.
inline TensorElement tensor_product(const Element& a, const Element& b) {
    TensorElement r(2);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term({ma, mb}, ca * cb);
    return r;
}
inline TensorElement tensor_product(const TensorElement& a, const Element& b) {
    if (a.degree() != 2) throw DegreeMismatch("tensor degree would exceed 3");
    TensorElement r(3);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term({ka[0], ka[1], mb}, ca * cb);
    return r;
}
inline TensorElement tensor_product(const Element& a, const TensorElement& b) {
    if (b.degree() != 2) throw DegreeMismatch("tensor degree would exceed 3");
    TensorElement r(3);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add_term({ma, kb[0], kb[1]}, ca * cb);
    return r;
}

/// Adjoint applied to each factor, coefficients conjugated.
inline TensorElement adjoint(const TensorElement& a) {
    TensorElement r(a.degree());
    for (const auto& [k, c] : a.terms()) {
        MonomialTuple key;
        for (auto m : k) key.push_back(swap(m));
        r.add_term(std::move(key), c.conj());
    }
    return r;
}

/// Finite combination of e_i (x) e_j.
using TensorVector = std::map<std::pair<std::int64_t, std::int64_t>, ExactScalar>;

inline TensorVector apply(const TensorElement& a, const TensorVector& x) {
    if (a.degree() != 2) throw DegreeMismatch("only degree-2 tensors act on l2 (x) l2");
    TensorVector out;
    for (const auto& [k, c] : a.terms())
        for (const auto& [ij, v] : x) {
            auto first = apply_monomial(k[0], ij.first);
            auto second = apply_monomial(k[1], ij.second);
            if (!first || !second) continue;
            auto& slot = out[{*first, *second}];
            slot += c * v;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

inline std::string to_string(const TensorElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : a.terms()) {
        if (!out.empty()) out += " + ";
        std::string factors;
        for (std::size_t i = 0; i < k.size(); ++i) factors += (i ? " (x) " : "") + to_string(k[i]);
        if (c == ExactScalar(1))
            out += "(" + factors + ")";
        else
            out += "(" + to_string(c) + ")*(" + factors + ")";
    }
    return out;
}

}  // namespace toeplitz
