#pragma once

// Comultiplication T(n,m) -> T(n,m) (x) T(n,m), the flip, the multiplication map
// and the weak-Hopf axioms on finite combinations. Also the explicit witness that
// the span {(a (x) I) Delta(b)} stays at distance >= 1 from T (x) T*.

#include <toeplitz/basis.hpp>
#include <toeplitz/element.hpp>
#include <toeplitz/random.hpp>
#include <toeplitz/tensor.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

namespace toeplitz {

inline TensorElement delta(const Element& a) {
    TensorElement r(2);
    for (const auto& [m, c] : a.terms()) r.add_term({m, m}, c);
    return r;
}

/// (Delta (x) id) Delta, which sends T(n,m) to its threefold tensor power.
inline TensorElement delta2(const Element& a) {
    TensorElement r(3);
    for (const auto& [m, c] : a.terms()) r.add_term({m, m, m}, c);
    return r;
}

/// Applies Delta to one slot of a degree-2 tensor, producing degree 3.
/// slot 0 gives (Delta (x) id), slot 1 gives (id (x) Delta).
inline TensorElement delta_at(const TensorElement& a, std::size_t slot) {
    if (a.degree() != 2 || slot > 1) throw DegreeMismatch("delta_at expects a degree-2 tensor and slot 0 or 1");
    TensorElement r(3);
    for (const auto& [k, c] : a.terms()) {
        MonomialTuple key = k;
        key.insert(key.begin() + static_cast<std::ptrdiff_t>(slot), k[slot]);
        r.add_term(std::move(key), c);
    }
    return r;
}

/// sigma(a (x) b) = b (x) a.
inline TensorElement flip(const TensorElement& a) {
    if (a.degree() != 2) throw DegreeMismatch("flip is defined on degree-2 tensors");
    TensorElement r(2);
    for (const auto& [k, c] : a.terms()) r.add_term({k[1], k[0]}, c);
    return r;
}

/// Multiplies the factors left to right.
inline Element mu(const TensorElement& a) {
    Element r;
    for (const auto& [k, c] : a.terms()) {
        Monomial product = k[0];
        for (std::size_t i = 1; i < k.size(); ++i) product = mul_monomial(product, k[i]);
        r.add_term(product, c);
    }
    return r;
}

/// Multiplies the factors right to left, i.e. a (b c) instead of (a b) c.
inline Element mu_right(const TensorElement& a) {
    Element r;
    for (const auto& [k, c] : a.terms()) {
        Monomial product = k.back();
        for (std::size_t i = k.size() - 1; i-- > 0;) product = mul_monomial(k[i], product);
        r.add_term(product, c);
    }
    return r;
}

/// Applies the weak antipode to the listed tensor slots.
inline TensorElement antipode_at(const TensorElement& a, const std::set<std::size_t>& slots) {
    TensorElement r(a.degree());
    for (const auto& [k, c] : a.terms()) {
        MonomialTuple key = k;
        for (auto s : slots) key.at(s) = swap(key.at(s));
        r.add_term(std::move(key), c);
    }
    return r;
}

struct WeakHopfReport {
    Element identity_side;  // mu (id (x) S (x) id) Delta^2 (a), should equal a
    Element antipode_side;  // mu (S (x) id (x) S) Delta^2 (a), should equal S(a)
    bool identity_axiom = false;
    bool antipode_axiom = false;
    bool holds() const noexcept { return identity_axiom && antipode_axiom; }
};

inline WeakHopfReport weak_hopf_report(const Element& a) {
    WeakHopfReport r;
    auto d2 = delta2(a);
    r.identity_side = mu(antipode_at(d2, {1}));
    r.antipode_side = mu(antipode_at(d2, {0, 2}));
    r.identity_axiom = r.identity_side == a;
    r.antipode_axiom = r.antipode_side == antipode(a);
    return r;
}

inline bool weak_hopf_check(const Element& a) { return weak_hopf_report(a).holds(); }

/// Result of testing sampled B in span{(T(n,m) (x) I) Delta(T(k,l))} against
/// A = T (x) T* on x = e_0 (x) e_1 (and the mirrored check for the other span).
struct WitnessReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Every sampled Bx has zero e_i (x) e_0 component.
    bool left_span_orthogonal = true;
    /// Mirror: every B in span{(I (x) a) Delta(b)} has zero e_0 (x) e_i component on e_1 (x) e_0.
    bool right_span_orthogonal = true;
    /// min over samples of |<(A - B)x, e_1 (x) e_0>|^2; its root bounds ||A - B|| from below.
    ExactScalar left_lower_bound_sq;
    ExactScalar right_lower_bound_sq;
    bool certified() const {
        return left_span_orthogonal && right_span_orthogonal && left_lower_bound_sq == ExactScalar(1) &&
               right_lower_bound_sq == ExactScalar(1);
    }
};

/// One random element of the span: sum of c (T(n,m) (x) I) Delta(T(k,l)), or the
/// mirrored (I (x) T(n,m)) Delta(T(k,l)) when mirrored is set.
inline TensorElement random_span_element(RandomSource& rng, bool mirrored, std::size_t terms = 4) {
    TensorElement b(2);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial outer = rng.monomial();
        Monomial inner = rng.monomial();
        // Bias towards l = 0 so the surviving branch of the argument is exercised.
        if (rng.uniform(0, 1) == 0) inner = Monomial{inner.n, 0};
        TensorElement factor = mirrored ? tensor_product(Element::identity(), Element(outer))
                                        : tensor_product(Element(outer), Element::identity());
        b += rng.nonzero_coefficient() * tensor_mul(factor, delta(Element(inner)));
    }
    return b;
}

inline TensorVector basis_tensor(std::int64_t i, std::int64_t j) { return {{{i, j}, ExactScalar(1)}}; }

inline ExactScalar component(const TensorVector& v, std::int64_t i, std::int64_t j) {
    auto it = v.find({i, j});
    return it == v.end() ? ExactScalar{} : it->second;
}

inline WitnessReport cqg_witness(std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("cqg_witness needs at least one sample");
    WitnessReport report;
    report.samples = samples;
    report.seed = seed;
    const auto target_left = TensorElement::pure({Monomial::shift(), Monomial::coshift()});
    const auto target_right = TensorElement::pure({Monomial::coshift(), Monomial::shift()});
    const auto x_left = basis_tensor(0, 1);
    const auto x_right = basis_tensor(1, 0);

    std::optional<ExactScalar> left_min, right_min;
    auto keep_min = [](std::optional<ExactScalar>& slot, const ExactScalar& v) {
        if (!slot || v.norm2() < slot->norm2()) slot = v;
    };
    for (std::size_t s = 0; s < samples; ++s) {
        RandomSource rng(derive_seed(seed, s));
        auto b_left = random_span_element(rng, false);
        auto bx = toeplitz::apply(b_left, x_left);
        for (const auto& [ij, v] : bx)
            if (ij.second == 0) report.left_span_orthogonal = false;
        keep_min(left_min, component(toeplitz::apply(target_left - b_left, x_left), 1, 0));

        auto b_right = random_span_element(rng, true);
        auto by = toeplitz::apply(b_right, x_right);
        for (const auto& [ij, v] : by)
            if (ij.first == 0) report.right_span_orthogonal = false;
        keep_min(right_min, component(toeplitz::apply(target_right - b_right, x_right), 0, 1));
    }
    report.left_lower_bound_sq = ExactScalar(left_min->norm2());
    report.right_lower_bound_sq = ExactScalar(right_min->norm2());
    return report;
}

}  // namespace toeplitz
