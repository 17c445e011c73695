#pragma once

// Floating-point oracle: compressions of elements to span{e_0, ..., e_{N-1}},
// operator-norm estimates, and discretized rotation averaging. Nothing here
// goes through the symbolic product; matrices are built from the basis action.

#include <toeplitz/basis.hpp>
#include <toeplitz/element.hpp>
#include <toeplitz/tensor.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace toeplitz {

class GuardBandTooSmall : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class NoConvergence : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class SpreadTooLarge : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Entry (i, j) is <A e_j, e_i>.
class TruncatedMatrix {
   public:
    using Matrix = Eigen::MatrixXcd;

    explicit TruncatedMatrix(Matrix m) : m_(std::move(m)) {}

    Eigen::Index size() const noexcept { return m_.rows(); }
    const Matrix& matrix() const noexcept { return m_; }
    std::complex<double> operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    friend TruncatedMatrix operator*(const TruncatedMatrix& a, const TruncatedMatrix& b) {
        return TruncatedMatrix(a.m_ * b.m_);
    }

   private:
    Matrix m_;
};

inline TruncatedMatrix truncate(const Element& a, std::int64_t size) {
    if (size < 1) throw std::invalid_argument("truncation size must be >= 1");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
    for (const auto& [mono, c] : a.terms()) {
        auto value = c.to_complex();
        for (std::int64_t j = mono.m; j < size; ++j) {
            std::int64_t i = j - mono.m + mono.n;
            if (i < size) m(i, j) += value;
        }
    }
    return TruncatedMatrix(std::move(m));
}

/// Compression of a degree-2 tensor to span{e_i (x) e_j : i, j < size}; basis
/// vector e_i (x) e_j sits at position i * size + j.
inline TruncatedMatrix truncate(const TensorElement& a, std::int64_t size) {
    if (a.degree() != 2) throw DegreeMismatch("only degree-2 tensors are truncated");
    if (size < 1) throw std::invalid_argument("truncation size must be >= 1");
    const std::int64_t dim = size * size;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [k, c] : a.terms()) {
        auto value = c.to_complex();
        for (std::int64_t j1 = k[0].m; j1 < size; ++j1) {
            std::int64_t i1 = j1 - k[0].m + k[0].n;
            if (i1 >= size) continue;
            for (std::int64_t j2 = k[1].m; j2 < size; ++j2) {
                std::int64_t i2 = j2 - k[1].m + k[1].n;
                if (i2 < size) m(i1 * size + i2, j1 * size + j2) += value;
            }
        }
    }
    return TruncatedMatrix(std::move(m));
}

struct CornerCheck {
    std::int64_t guard = 0;      // rows/columns >= size - guard are excluded
    double max_deviation = 0;
    bool passed = false;
};

/// Compares trunc(ab) with trunc(a) trunc(b) on the leading (N - d) x (N - d)
/// block, d the largest monomial entry in a, b and ab. Truncation is not
/// multiplicative in the top band of width d.
inline CornerCheck corner_product_report(const Element& a, const Element& b, std::int64_t size,
                                         double tol = 1e-12) {
    auto ab = mul(a, b);
    std::int64_t d = std::max({a.max_entry(), b.max_entry(), ab.max_entry()});
    if (size <= 2 * d)
        throw GuardBandTooSmall("corner_product_check needs N > " + std::to_string(2 * d) + ", got " +
                                std::to_string(size));
    auto lhs = truncate(ab, size).matrix();
    auto rhs = (truncate(a, size) * truncate(b, size)).matrix();
    std::int64_t keep = size - d;
    CornerCheck r;
    r.guard = d;
    r.max_deviation = (lhs.topLeftCorner(keep, keep) - rhs.topLeftCorner(keep, keep)).cwiseAbs().maxCoeff();
    r.passed = r.max_deviation <= tol;
    return r;
}

inline bool corner_product_check(const Element& a, const Element& b, std::int64_t size) {
    return corner_product_report(a, b, size).passed;
}

struct PowerIterationOptions {
    double tol = 1e-10;
    std::int64_t max_iterations = 100000;
};

/// Largest singular value by power iteration on the Gram matrix A*A, started from
/// the normalized all-ones vector, stopping once successive estimates agree to
/// relative tolerance tol.
inline double op_norm(const TruncatedMatrix& a, PowerIterationOptions opts = {}) {
    if (!(opts.tol > 0)) throw std::invalid_argument("op_norm requires tol > 0");
    const auto& m = a.matrix();
    if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    const Eigen::Index n = m.cols();
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n).normalized();
    if ((m * v).norm() == 0.0) {
        // Start vector in the kernel; fall back to a fixed ramp.
        for (Eigen::Index j = 0; j < n; ++j) v(j) = 1.0 + static_cast<double>(j) / static_cast<double>(n);
        v.normalize();
    }
    double previous = -1;
    for (std::int64_t it = 0; it < opts.max_iterations; ++it) {
        Eigen::VectorXcd u = m.adjoint() * (m * v);
        double lambda = v.dot(u).real();  // Rayleigh quotient, v normalized
        double u_norm = u.norm();
        if (u_norm == 0.0) return 0.0;
        double sigma = std::sqrt(std::max(lambda, 0.0));
        if (previous >= 0 && std::abs(sigma - previous) <= opts.tol * sigma) return sigma;
        previous = sigma;
        v = u / u_norm;
    }
    throw NoConvergence("power iteration did not converge in " + std::to_string(opts.max_iterations) +
                        " iterations");
}

inline double op_norm(const TruncatedMatrix& a, double tol) { return op_norm(a, PowerIterationOptions{tol}); }

/// Compactness decided from the basis action alone: with j0 = 1 + max entry, every
/// term acts on e_j (j >= j0) as a shift by its index, so the element is compact
/// (finite rank) exactly when it annihilates e_j for j0 <= j <= j0 + spread.
inline bool finite_rank_oracle(const Element& a) {
    const std::int64_t j0 = 1 + a.max_entry();
    for (std::int64_t j = j0; j <= j0 + a.spread(); ++j)
        if (!apply(a, BasisVector(j)).is_zero()) return false;
    return true;
}

using FloatElement = std::map<Monomial, std::complex<double>>;

/// (1/M) sum_j e^{-2 pi i jk/M} alpha_{2 pi j/M}(a), where alpha_theta multiplies
/// T(n,m) by e^{i ind theta}. With M > 2 max|ind| this isolates the index-k terms.
inline FloatElement rotation_average(const Element& a, std::int64_t k, std::int64_t samples) {
    if (samples <= 2 * a.spread())
        throw SpreadTooLarge("rotation_average needs M > " + std::to_string(2 * a.spread()) + ", got " +
                             std::to_string(samples));
    FloatElement out;
    for (const auto& [mono, c] : a.terms()) {
        std::complex<double> acc = 0;
        for (std::int64_t j = 0; j < samples; ++j) {
            double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
            acc += std::polar(1.0, theta * static_cast<double>(index(mono) - k));
        }
        out[mono] = c.to_complex() * acc / static_cast<double>(samples);
    }
    return out;
}

/// max |x - y| over the union of supports.
inline double max_deviation(const FloatElement& x, const Element& y) {
    double dev = 0;
    for (const auto& [m, v] : x) dev = std::max(dev, std::abs(v - y.coefficient(m).to_complex()));
    for (const auto& [m, c] : y.terms())
        if (!x.contains(m)) dev = std::max(dev, std::abs(c.to_complex()));
    return dev;
}

inline FloatElement operator+(FloatElement a, const FloatElement& b) {
    for (const auto& [m, v] : b) a[m] += v;
    return a;
}

struct DeltaNormProbe {
    double delta_norm = 0;     // ||trunc_N(Delta a)||
    double element_norm = 0;   // ||trunc_N(a)||
    double diagonal_norm = 0;  // ||trunc_N(Delta a)|| restricted to span{e_j (x) e_j}
};

/// Delta(a) preserves span{e_j (x) e_j} and acts there as a does on span{e_j}, so
/// the truncated norm of Delta(a) is at least the truncated norm of a.
inline DeltaNormProbe delta_norm_probe(const TensorElement& delta_a, const Element& a, std::int64_t size,
                                       PowerIterationOptions opts = {}) {
    DeltaNormProbe p;
    auto big = truncate(delta_a, size);
    p.delta_norm = op_norm(big, opts);
    p.element_norm = op_norm(truncate(a, size), opts);
    Eigen::MatrixXcd diag(size, size);
    for (std::int64_t i = 0; i < size; ++i)
        for (std::int64_t j = 0; j < size; ++j) diag(i, j) = big(i * size + i, j * size + j);
    p.diagonal_norm = op_norm(TruncatedMatrix(diag), opts);
    return p;
}

/// Text dump: first line N, then N lines of N "re im" pairs, row-major, full
/// double precision.
inline void dump(const TruncatedMatrix& a, std::ostream& os) {
    os << a.size() << '\n' << std::setprecision(17);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        for (Eigen::Index j = 0; j < a.size(); ++j) {
            if (j) os << ' ';
            os << a(i, j).real() << ' ' << a(i, j).imag();
        }
        os << '\n';
    }
}

}  // namespace toeplitz
