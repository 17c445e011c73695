#pragma once

// Coefficient types.
//
// ExactScalar is a Gaussian rational re + im*i with arbitrary-precision
// numerator and denominator; equality is exact. Scalar is the mixed tier used
// by functionals and measures: it stays exact until it meets a floating value,
// then degrades to std::complex<double> and remembers that it did.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace toeplitz {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& r) {
    // cpp_rational prints "p/q", or "p" for integers.
    return r.str();
}

/// Parses "p", "-p" or "p/q" into a reduced rational.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad integer");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

class ExactScalar {
   public:
    ExactScalar() = default;
    ExactScalar(std::int64_t re) : re_(re) {}  // NOLINT: implicit from integers is intended
    ExactScalar(Rational re) : re_(std::move(re)) {}  // NOLINT
    ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactScalar i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }
    bool is_real() const noexcept { return im_ == 0; }

    ExactScalar conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

    ExactScalar operator-() const { return {-re_, -im_}; }

    ExactScalar& operator+=(const ExactScalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) {
        if (im_ == 0 && o.im_ == 0) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    ExactScalar& operator/=(const ExactScalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero scalar");
        if (o.im_ == 0) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        Rational d = o.norm2();
        *this *= o.conj();
        re_ /= d;
        im_ /= d;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

   private:
    Rational re_{0};
    Rational im_{0};
};

inline ExactScalar pow(ExactScalar base, std::uint64_t exp) {
    ExactScalar result(1);
    while (exp) {
        if (exp & 1u) result *= base;
        exp >>= 1u;
        if (exp) base *= base;
    }
    return result;
}

/// Renders a Gaussian rational in the expression syntax: "3/2", "-i", "2 + 1/3i".
inline std::string to_string(const ExactScalar& z) {
    auto imag_part = [](const Rational& v) {
        Rational a = abs(v);
        return a == 1 ? std::string("i") : to_string(a) + "i";
    };
    if (z.is_real()) return to_string(z.re());
    if (z.re() == 0) return (z.im() < 0 ? "-" : "") + imag_part(z.im());
    return to_string(z.re()) + (z.im() < 0 ? " - " : " + ") + imag_part(z.im());
}

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& z) { return os << to_string(z); }

/// Exact-or-floating scalar. Arithmetic between two exact values stays exact;
/// anything touching a floating value is floating.
class Scalar {
   public:
    Scalar() : v_(ExactScalar{}) {}
    Scalar(ExactScalar z) : v_(std::move(z)) {}  // NOLINT
    Scalar(std::int64_t x) : v_(ExactScalar(x)) {}  // NOLINT
    Scalar(Rational x) : v_(ExactScalar(std::move(x))) {}  // NOLINT
    Scalar(std::complex<double> z) : v_(z) {}  // NOLINT

    bool is_exact() const noexcept { return std::holds_alternative<ExactScalar>(v_); }
    const ExactScalar& exact() const {
        if (!is_exact()) throw std::logic_error("scalar is in the floating tier");
        return std::get<ExactScalar>(v_);
    }
    std::complex<double> to_complex() const {
        return is_exact() ? std::get<ExactScalar>(v_).to_complex() : std::get<std::complex<double>>(v_);
    }
    double abs() const { return std::abs(to_complex()); }
    bool is_zero() const {
        return is_exact() ? std::get<ExactScalar>(v_).is_zero() : std::get<std::complex<double>>(v_) == 0.0;
    }

    Scalar conj() const {
        if (is_exact()) return exact().conj();
        return std::conj(to_complex());
    }
    Scalar operator-() const {
        if (is_exact()) return -exact();
        return -to_complex();
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.exact() + b.exact();
        return a.to_complex() + b.to_complex();
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.exact() - b.exact();
        return a.to_complex() - b.to_complex();
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.exact() * b.exact();
        return a.to_complex() * b.to_complex();
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.exact() / b.exact();
        return a.to_complex() / b.to_complex();
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Exact comparison when both sides are exact; bitwise complex comparison otherwise.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
        return a.to_complex() == b.to_complex();
    }

   private:
    std::variant<ExactScalar, std::complex<double>> v_;
};

inline bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_exact() && b.is_exact()) return a == b;
    return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

inline std::string to_string(const Scalar& s) {
    if (s.is_exact()) return to_string(s.exact());
    std::ostringstream os;
    os.precision(17);
    auto z = s.to_complex();
    if (z.imag() == 0.0) {
        os << z.real();
    } else {
        os << "(" << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace toeplitz
