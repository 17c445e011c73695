#pragma once

// Expression language for elements and tensors.
//
//   T(n,m)   monomial literal ("T(" must be adjacent)
//   T  T*  I shorthands for T(1,0), T(0,1), T(0,0). "T*" is one token whenever
//            the star immediately follows T, so "T*T" is T* times T and "T * T"
//            is T squared.
//   3/2 2i i Gaussian-rational literals (the i suffix must be adjacent)
//   + - *    sum, difference, product; juxtaposition also multiplies
//   ^n       natural power, binds tighter than *
//   '        adjoint (postfix), binds tightest
//   (x)      tensor product, lowest precedence
//
// The grammar is in docs/grammar.ebnf.

#include <toeplitz/element.hpp>
#include <toeplitz/tensor.hpp>

#include <cctype>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace toeplitz::expr {

class SyntaxError : public std::invalid_argument {
   public:
    SyntaxError(std::size_t offset, std::set<std::string> expected, const std::string& found)
        : std::invalid_argument(describe(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::set<std::string>& expected() const noexcept { return expected_; }

   private:
    static std::string describe(std::size_t offset, const std::set<std::string>& expected, const std::string& found) {
        std::string msg = "syntax error at byte " + std::to_string(offset) + ": found " + found + ", expected one of {";
        bool first = true;
        for (const auto& e : expected) {
            msg += (first ? "" : ", ") + e;
            first = false;
        }
        return msg + "}";
    }

    std::size_t offset_;
    std::set<std::string> expected_;
};

class EvalError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// AST

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class Spelling { literal, shift, coshift, identity };

struct MonomialLit {
    Monomial value;
    Spelling spelling = Spelling::literal;
    friend bool operator==(const MonomialLit&, const MonomialLit&) = default;
};

/// Nonnegative rational, optionally times i. Signs are separate Neg nodes.
struct NumberLit {
    Rational value;
    bool imaginary = false;
    friend bool operator==(const NumberLit&, const NumberLit&) = default;
};

struct Neg {
    ExprPtr operand;
};

enum class BinaryOp { add, sub, mul, tensor };

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Power {
    ExprPtr base;
    std::uint64_t exponent;
};

struct Adjoint {
    ExprPtr operand;
};

struct Expr {
    std::variant<NumberLit, MonomialLit, Neg, Binary, Power, Adjoint> node;
};

template <class Node>
ExprPtr make(Node node) {
    return std::make_shared<const Expr>(Expr{std::move(node)});
}

inline bool operator==(const Expr& a, const Expr& b);

inline bool same(const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); }

inline bool operator==(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&b](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, NumberLit> || std::is_same_v<T, MonomialLit>) {
                return x == y;
            } else if constexpr (std::is_same_v<T, Neg> || std::is_same_v<T, Adjoint>) {
                return same(x.operand, y.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
            } else {
                return x.exponent == y.exponent && same(x.base, y.base);
            }
        },
        a.node);
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { number, imag, t, t_star, t_open, ident, lparen, rparen, comma, plus, minus, star, caret, quote,
                 tensor, end };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

inline std::string describe(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::imag: return "'i'";
        case Tok::t: return "'T'";
        case Tok::t_star: return "'T*'";
        case Tok::t_open: return "'T('";
        case Tok::ident: return "'I'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::caret: return "'^'";
        case Tok::quote: return "'''";
        case Tok::tensor: return "'(x)'";
        case Tok::end: return "end of input";
    }
    return "?";
}

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_digit = [&](std::size_t p) { return p < src.size() && std::isdigit(static_cast<unsigned char>(src[p])); };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_digit(i)) {
            while (is_digit(i)) ++i;
            if (i < src.size() && src[i] == '/' && is_digit(i + 1)) {
                ++i;
                while (is_digit(i)) ++i;
            }
            bool imag = i < src.size() && src[i] == 'i';
            std::string text(src.substr(start, i - start));
            if (imag) ++i;
            out.push_back({imag ? Tok::imag : Tok::number, start, text});
            continue;
        }
        if (src.substr(i, 3) == "(x)") {
            out.push_back({Tok::tensor, start, "(x)"});
            i += 3;
            continue;
        }
        switch (c) {
            case 'T':
                if (i + 1 < src.size() && src[i + 1] == '*') {
                    out.push_back({Tok::t_star, start, "T*"});
                    i += 2;
                } else if (i + 1 < src.size() && src[i + 1] == '(') {
                    out.push_back({Tok::t_open, start, "T("});
                    i += 2;
                } else {
                    out.push_back({Tok::t, start, "T"});
                    ++i;
                }
                continue;
            case 'I': out.push_back({Tok::ident, start, "I"}); break;
            case 'i': out.push_back({Tok::imag, start, ""}); break;
            case '(': out.push_back({Tok::lparen, start, "("}); break;
            case ')': out.push_back({Tok::rparen, start, ")"}); break;
            case ',': out.push_back({Tok::comma, start, ","}); break;
            case '+': out.push_back({Tok::plus, start, "+"}); break;
            case '-': out.push_back({Tok::minus, start, "-"}); break;
            case '*': out.push_back({Tok::star, start, "*"}); break;
            case '^': out.push_back({Tok::caret, start, "^"}); break;
            case '\'': out.push_back({Tok::quote, start, "'"}); break;
            default:
                throw SyntaxError(start, {"number", "'T'", "'T*'", "'T('", "'I'", "'i'", "'('", "'-'"},
                                  "'" + std::string(1, c) + "'");
        }
        ++i;
    }
    out.push_back({Tok::end, src.size(), ""});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
   public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    ExprPtr parse_all() {
        auto e = tensor();
        expect(Tok::end, {"'+'", "'-'", "'*'", "'^'", "'''", "'(x)'", "end of input"});
        return e;
    }

   private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool accept(Tok t) {
        if (peek().kind != t) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(std::set<std::string> expected) const {
        const auto& t = peek();
        std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        if (t.kind == Tok::imag && t.text.empty()) found = "'i'";
        throw SyntaxError(t.offset, std::move(expected), found);
    }
    const Token& expect(Tok t, std::set<std::string> expected) {
        if (peek().kind != t) fail(std::move(expected));
        return next();
    }

    static bool starts_primary(Tok t) {
        return t == Tok::number || t == Tok::imag || t == Tok::t || t == Tok::t_star || t == Tok::t_open ||
               t == Tok::ident || t == Tok::lparen;
    }

    ExprPtr tensor() {
        auto lhs = sum();
        while (accept(Tok::tensor)) lhs = make(Binary{BinaryOp::tensor, lhs, sum()});
        return lhs;
    }

    ExprPtr sum() {
        auto lhs = term();
        for (;;) {
            if (accept(Tok::plus))
                lhs = make(Binary{BinaryOp::add, lhs, term()});
            else if (accept(Tok::minus))
                lhs = make(Binary{BinaryOp::sub, lhs, term()});
            else
                return lhs;
        }
    }

    ExprPtr term() {
        auto lhs = unary();
        for (;;) {
            if (accept(Tok::star))
                lhs = make(Binary{BinaryOp::mul, lhs, unary()});
            else if (starts_primary(peek().kind))
                lhs = make(Binary{BinaryOp::mul, lhs, unary()});
            else
                return lhs;
        }
    }

    ExprPtr unary() {
        if (accept(Tok::minus)) return make(Neg{unary()});
        if (accept(Tok::plus)) return unary();
        return power();
    }

    ExprPtr power() {
        auto base = postfix();
        while (accept(Tok::caret)) {
            const auto& t = expect(Tok::number, {"natural number"});
            if (t.text.find('/') != std::string::npos) throw SyntaxError(t.offset, {"natural number"}, t.text);
            base = make(Power{base, std::stoull(t.text)});
        }
        return base;
    }

    ExprPtr postfix() {
        auto e = primary();
        while (accept(Tok::quote)) e = make(Adjoint{e});
        return e;
    }

    std::int64_t small_integer() {
        const auto& t = expect(Tok::number, {"natural number"});
        if (t.text.find('/') != std::string::npos || t.text.size() > 12)
            throw SyntaxError(t.offset, {"natural number"}, "'" + t.text + "'");
        return std::stoll(t.text);
    }

    ExprPtr primary() {
        const auto& t = peek();
        switch (t.kind) {
            case Tok::number: next(); return make(NumberLit{parse_rational(t.text), false});
            case Tok::imag:
                next();
                return make(NumberLit{t.text.empty() ? Rational(1) : parse_rational(t.text), true});
            case Tok::t: next(); return make(MonomialLit{Monomial::shift(), Spelling::shift});
            case Tok::t_star: next(); return make(MonomialLit{Monomial::coshift(), Spelling::coshift});
            case Tok::ident: next(); return make(MonomialLit{Monomial::identity(), Spelling::identity});
            case Tok::t_open: {
                next();
                auto n = small_integer();
                expect(Tok::comma, {"','"});
                auto m = small_integer();
                expect(Tok::rparen, {"')'"});
                return make(MonomialLit{Monomial{n, m}, Spelling::literal});
            }
            case Tok::lparen: {
                next();
                auto e = tensor();
                expect(Tok::rparen, {"')'", "'+'", "'-'", "'*'", "'(x)'"});
                return e;
            }
            default: fail({"number", "'i'", "'T'", "'T*'", "'T('", "'I'", "'('", "'-'"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printer

namespace detail {

inline int precedence(const Expr& e) {
    return std::visit(
        [](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Binary>) {
                switch (x.op) {
                    case BinaryOp::tensor: return 1;
                    case BinaryOp::add:
                    case BinaryOp::sub: return 2;
                    case BinaryOp::mul: return 3;
                }
                return 0;
            } else if constexpr (std::is_same_v<T, Neg>) {
                return 4;
            } else if constexpr (std::is_same_v<T, Power>) {
                return 5;
            } else if constexpr (std::is_same_v<T, Adjoint>) {
                return 6;
            } else {
                return 7;
            }
        },
        e.node);
}

}  // namespace detail

inline std::string print(const Expr& e);

inline std::string print_at(const ExprPtr& e, int min_prec) {
    auto s = print(*e);
    return detail::precedence(*e) < min_prec ? "(" + s + ")" : s;
}

/// Minimal-parenthesis rendering; parse(print(e)) reproduces e.
inline std::string print(const Expr& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NumberLit>) {
                if (!x.imaginary) return to_string(x.value);
                return x.value == 1 ? "i" : to_string(x.value) + "i";
            } else if constexpr (std::is_same_v<T, MonomialLit>) {
                switch (x.spelling) {
                    case Spelling::shift: return "T";
                    case Spelling::coshift: return "T*";
                    case Spelling::identity: return "I";
                    case Spelling::literal: break;
                }
                return to_string(x.value);
            } else if constexpr (std::is_same_v<T, Neg>) {
                return "-" + print_at(x.operand, 4);
            } else if constexpr (std::is_same_v<T, Binary>) {
                static constexpr const char* ops[] = {" + ", " - ", " * ", " (x) "};
                int p = x.op == BinaryOp::tensor ? 1 : x.op == BinaryOp::mul ? 3 : 2;
                return print_at(x.lhs, p) + ops[static_cast<int>(x.op)] + print_at(x.rhs, p + 1);
            } else if constexpr (std::is_same_v<T, Power>) {
                return print_at(x.base, 5) + "^" + std::to_string(x.exponent);
            } else {
                return print_at(x.operand, 6) + "'";
            }
        },
        e.node);
}

inline std::string print(const ExprPtr& e) { return print(*e); }

// ---------------------------------------------------------------------------
// Evaluation

using Value = std::variant<Element, TensorElement>;

namespace detail {

inline bool is_scalar(const Element& a) {
    return a.is_zero() || (a.size() == 1 && a.terms().begin()->first == Monomial::identity());
}

inline ExactScalar scalar_of(const Element& a) {
    return a.is_zero() ? ExactScalar{} : a.terms().begin()->second;
}

inline TensorElement tensor_identity(std::size_t degree) {
    TensorElement r(degree);
    r.add_term(MonomialTuple(degree, Monomial::identity()), ExactScalar(1));
    return r;
}

}  // namespace detail

inline Value evaluate(const Expr& e) {
    return std::visit(
        [](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NumberLit>) {
                return Element::scalar(x.imaginary ? ExactScalar(Rational(0), x.value) : ExactScalar(x.value));
            } else if constexpr (std::is_same_v<T, MonomialLit>) {
                return Element(x.value);
            } else if constexpr (std::is_same_v<T, Neg>) {
                return std::visit([](auto v) -> Value { return -v; }, evaluate(*x.operand));
            } else if constexpr (std::is_same_v<T, Adjoint>) {
                return std::visit([](const auto& v) -> Value { return adjoint(v); }, evaluate(*x.operand));
            } else if constexpr (std::is_same_v<T, Power>) {
                auto base = evaluate(*x.base);
                if (auto* el = std::get_if<Element>(&base)) return pow(*el, x.exponent);
                const auto& t = std::get<TensorElement>(base);
                auto r = detail::tensor_identity(t.degree());
                for (std::uint64_t k = 0; k < x.exponent; ++k) r = tensor_mul(r, t);
                return r;
            } else {
                auto lhs = evaluate(*x.lhs);
                auto rhs = evaluate(*x.rhs);
                auto* le = std::get_if<Element>(&lhs);
                auto* re = std::get_if<Element>(&rhs);
                auto* lt = std::get_if<TensorElement>(&lhs);
                auto* rt = std::get_if<TensorElement>(&rhs);
                switch (x.op) {
                    case BinaryOp::add:
                    case BinaryOp::sub: {
                        bool add = x.op == BinaryOp::add;
                        if (le && re) return add ? *le + *re : *le - *re;
                        if (lt && rt) {
                            if (lt->degree() != rt->degree()) throw EvalError("cannot add tensors of different degree");
                            return add ? *lt + *rt : *lt - *rt;
                        }
                        throw EvalError("cannot add an element and a tensor");
                    }
                    case BinaryOp::mul:
                        if (le && re) return mul(*le, *re);
                        if (lt && rt) {
                            if (lt->degree() != rt->degree())
                                throw EvalError("cannot multiply tensors of different degree");
                            return tensor_mul(*lt, *rt);
                        }
                        if (le && detail::is_scalar(*le)) return detail::scalar_of(*le) * *rt;
                        if (re && detail::is_scalar(*re)) return detail::scalar_of(*re) * *lt;
                        throw EvalError("only scalars multiply tensors from outside");
                    case BinaryOp::tensor:
                        try {
                            if (le && re) return tensor_product(*le, *re);
                            if (lt && re) return tensor_product(*lt, *re);
                            if (le && rt) return tensor_product(*le, *rt);
                        } catch (const DegreeMismatch& err) {
                            throw EvalError(err.what());
                        }
                        throw EvalError("tensor degree would exceed 3");
                }
                throw EvalError("unknown operator");
            }
        },
        e.node);
}

inline Value evaluate(const ExprPtr& e) { return evaluate(*e); }

/// Parses and evaluates; throws EvalError if the result is a tensor.
inline Element parse_element(std::string_view text) {
    auto v = evaluate(parse(text));
    if (auto* el = std::get_if<Element>(&v)) return *el;
    throw EvalError("expected an element, got a tensor of degree " +
                    std::to_string(std::get<TensorElement>(v).degree()));
}

}  // namespace toeplitz::expr
