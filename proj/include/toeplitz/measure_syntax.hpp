#pragma once

// Text form of circle measures:
//
//   measure := term { ("+" | "-") term }
//   term    := [scalar "*"] atom ["*" scalar]
//   atom    := "dirac(" rational ")" | "density{" [entry {"," entry}] "}" | "haar"
//   entry   := integer ":" scalar
//   scalar  := real ["i"] | "i" | "(" ["-"] part {("+" | "-") part} ")"
//
// Angles are fractions of a full turn. Decimal numbers put the value in the
// floating tier; everything else is exact.

#include <toeplitz/circle_measure.hpp>
#include <toeplitz/expr.hpp>

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>

namespace toeplitz {

namespace detail {

class MeasureReader {
   public:
    explicit MeasureReader(std::string_view s) : s_(s) {}

    CircleMeasure read_all() {
        CircleMeasure total = signed_term(false);
        for (;;) {
            skip();
            if (at_end()) return total;
            if (eat('+'))
                total = total + signed_term(false);
            else if (eat('-'))
                total = total + signed_term(true);
            else
                fail({"'+'", "'-'", "end of input"});
        }
    }

   private:
    bool at_end() const { return pos_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (!at_end() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(std::set<std::string> expected) const {
        std::string found = at_end() ? "end of input" : "'" + std::string(1, s_[pos_]) + "'";
        throw expr::SyntaxError(pos_, std::move(expected), found);
    }
    void expect(char c) {
        if (!eat(c)) fail({"'" + std::string(1, c) + "'"});
    }

    CircleMeasure signed_term(bool negate) {
        skip();
        if (eat('-')) negate = !negate;
        Scalar weight(1);
        skip();
        if (!at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == 'i')) {
            weight = scalar();
            expect('*');
        }
        CircleMeasure atom = read_atom();
        if (eat('*')) weight = weight * scalar();
        if (negate) weight = -weight;
        return weight * atom;
    }

    CircleMeasure read_atom() {
        if (eat_word("dirac")) {
            expect('(');
            skip();
            std::size_t start = pos_;
            if (!at_end() && s_[pos_] == '-') ++pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
            Rational turn;
            try {
                turn = parse_rational(s_.substr(start, pos_ - start));
            } catch (const std::exception&) {
                pos_ = start;
                fail({"rational turn p/q"});
            }
            expect(')');
            return CircleMeasure::dirac(turn);
        }
        if (eat_word("density")) {
            expect('{');
            CircleMeasure m;
            if (eat('}')) return m;
            do {
                skip();
                std::size_t start = pos_;
                if (!at_end() && s_[pos_] == '-') ++pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) {
                    pos_ = start;
                    fail({"integer frequency"});
                }
                std::int64_t k = std::stoll(std::string(s_.substr(start, pos_ - start)));
                expect(':');
                m.add_density(k, scalar());
            } while (eat(','));
            expect('}');
            return m;
        }
        if (eat_word("haar")) return CircleMeasure::haar_measure();
        fail({"'dirac('", "'density{'", "'haar'"});
    }

    /// real ["i"] | "i"
    Scalar part() {
        skip();
        if (eat('i')) return ExactScalar::i();
        std::size_t start = pos_;
        bool decimal = false;
        while (!at_end()) {
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '/') {
                ++pos_;
            } else if (c == '.' || c == 'e' || c == 'E') {
                decimal = true;
                ++pos_;
                if (c != '.' && !at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
            } else {
                break;
            }
        }
        if (pos_ == start) fail({"number", "'i'", "'('"});
        std::string text(s_.substr(start, pos_ - start));
        bool imag = !at_end() && s_[pos_] == 'i';
        if (imag) ++pos_;
        Scalar v;
        if (decimal) {
            char* end = nullptr;
            double d = std::strtod(text.c_str(), &end);
            if (end != text.c_str() + text.size()) {
                pos_ = start;
                fail({"number"});
            }
            v = std::complex<double>(d, 0.0);
        } else {
            v = ExactScalar(parse_rational(text));
        }
        return imag ? v * Scalar(ExactScalar::i()) : v;
    }

    Scalar scalar() {
        skip();
        if (!eat('(')) return part();
        bool negate = eat('-');
        Scalar total = part();
        if (negate) total = -total;
        for (;;) {
            if (eat('+'))
                total = total + part();
            else if (eat('-'))
                total = total - part();
            else
                break;
        }
        expect(')');
        return total;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline std::string weight_text(const Scalar& w) {
    if (w.is_exact()) {
        const auto& z = w.exact();
        if (z.is_real() && z.re() >= 0) return to_string(z);
        return "(" + to_string(z) + ")";
    }
    auto s = to_string(w);
    return s.front() == '(' || s.front() != '-' ? s : "(" + s + ")";
}

}  // namespace detail

inline CircleMeasure parse_measure(std::string_view text) { return detail::MeasureReader(text).read_all(); }

/// Inverse of parse_measure up to floating-point rounding of floating-tier values.
inline std::string to_string(const CircleMeasure& mu) {
    std::string out;
    for (const auto& [turn, w] : mu.atoms()) {
        if (!out.empty()) out += " + ";
        out += "dirac(" + to_string(turn) + ")";
        if (!(w == Scalar(1))) out += " * " + detail::weight_text(w);
    }
    if (!mu.density().is_zero()) {
        if (!out.empty()) out += " + ";
        out += "density{";
        bool first = true;
        for (const auto& [k, c] : mu.density().coefficients()) {
            out += (first ? "" : ", ") + std::to_string(k) + ": " + detail::weight_text(c);
            first = false;
        }
        out += "}";
    }
    return out.empty() ? "density{}" : out;
}

}  // namespace toeplitz
