#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "weyl/element.hpp"
#include "weyl/errors.hpp"

namespace weyl {

enum class ParseMode { weyl, poly };

/// Grammar (whitespace insignificant, no implicit multiplication):
///   expr     := term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ('^' nat)?
///   atom     := rational | 'x' | 'y' | '(' expr ')' | '-' atom
///   rational := digits ('/' digits)?
/// '^' on a negated atom is rejected; write "(-x)^2".
struct ExprNode {
    enum class Kind {
        Rational,
        Generator,
        Sum,
        Difference,
        Product,
        Power,
        Negation,
        Group
    };

    Kind kind;
    Scalar value;                   // Rational
    char generator = 0;             // Generator: 'x', 'y', 'X' or 'Y'
    int exponent = 0;               // Power
    std::unique_ptr<ExprNode> lhs;  // binary left; unary child
    std::unique_ptr<ExprNode> rhs;  // binary right
};

struct ExprAst {
    std::unique_ptr<ExprNode> root;
};

namespace detail {

class Parser {
public:
    Parser(std::string_view text, ParseMode mode) : text_(text), mode_(mode) {}

    std::unique_ptr<ExprNode> run() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("SyntaxError", pos_, "unexpected trailing input");
        return e;
    }

private:
    using Kind = ExprNode::Kind;

    static std::unique_ptr<ExprNode> node(Kind k) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        return n;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    std::unique_ptr<ExprNode> parse_expr() {
        auto lhs = parse_term();
        for (;;) {
            skip_ws();
            if (!at('+') && !at('-'))
                return lhs;
            const bool plus = text_[pos_] == '+';
            ++pos_;
            auto n = node(plus ? Kind::Sum : Kind::Difference);
            n->lhs = std::move(lhs);
            n->rhs = parse_term();
            lhs = std::move(n);
        }
    }

    std::unique_ptr<ExprNode> parse_term() {
        auto lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (!at('*'))
                return lhs;
            ++pos_;
            auto n = node(Kind::Product);
            n->lhs = std::move(lhs);
            n->rhs = parse_factor();
            lhs = std::move(n);
        }
    }

    std::unique_ptr<ExprNode> parse_factor() {
        auto base = parse_atom();
        skip_ws();
        if (!at('^'))
            return base;
        if (base->kind == Kind::Negation)
            throw ParseError("SyntaxError", pos_,
                             "exponent on a negated atom; write \"(-x)^2\"");
        ++pos_;
        skip_ws();
        if (at('-'))
            throw ParseError("InvalidExponent", pos_,
                             "exponents must be nonnegative integers");
        if (pos_ == text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("SyntaxError", pos_, "expected an exponent");
        unsigned long value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (value > 1000000)
                throw ParseError("InvalidExponent", pos_,
                                 "exponent out of range");
            ++pos_;
        }
        skip_ws();
        if (at('/'))
            throw ParseError("InvalidExponent", pos_,
                             "exponents must be integers");
        auto n = node(Kind::Power);
        n->exponent = static_cast<int>(value);
        n->lhs = std::move(base);
        return n;
    }

    std::unique_ptr<ExprNode> parse_atom() {
        skip_ws();
        if (pos_ == text_.size())
            throw ParseError("SyntaxError", pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            skip_ws();
            if (!at(')'))
                throw ParseError("SyntaxError", pos_, "expected ')'");
            ++pos_;
            auto n = node(Kind::Group);
            n->lhs = std::move(inner);
            return n;
        }
        if (c == '-') {
            ++pos_;
            auto n = node(Kind::Negation);
            n->lhs = parse_atom();
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return parse_rational();
        if (c == 'x' || c == 'y' || c == 'X' || c == 'Y') {
            const bool upper = c == 'X' || c == 'Y';
            if (upper == (mode_ == ParseMode::weyl))
                throw ParseError(
                    "WrongGenerator", pos_,
                    mode_ == ParseMode::weyl
                        ? "this mode uses generators x and y"
                        : "this mode uses generators X and Y");
            ++pos_;
            auto n = node(Kind::Generator);
            n->generator = c;
            return n;
        }
        throw ParseError("SyntaxError", pos_,
                         std::string("unexpected character '") + c + "'");
    }

    std::unique_ptr<ExprNode> parse_rational() {
        const std::string num = read_digits();
        std::string den;
        if (at('/')) {
            const std::size_t slash = pos_;
            ++pos_;
            if (pos_ == text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("SyntaxError", pos_, "expected a denominator");
            den = read_digits();
            if (Integer(den) == 0)
                throw ParseError("SyntaxError", slash + 1,
                                 "denominator must be positive");
        }
        auto n = node(Kind::Rational);
        Scalar v(Integer(num), den.empty() ? Integer(1) : Integer(den));
        v.canonicalize();
        n->value = std::move(v);
        return n;
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out += text_[pos_++];
        return out;
    }

    std::string_view text_;
    ParseMode mode_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ExprAst parse(std::string_view input, ParseMode mode) {
    return ExprAst{detail::Parser(input, mode).run()};
}

template <class Mul>
Element<Mul> eval(const ExprNode& n) {
    using E = Element<Mul>;
    using Kind = ExprNode::Kind;
    switch (n.kind) {
    case Kind::Rational:
        return E(n.value);
    case Kind::Generator:
        return (n.generator == 'x' || n.generator == 'X') ? E::x() : E::y();
    case Kind::Sum:
        return eval<Mul>(*n.lhs) + eval<Mul>(*n.rhs);
    case Kind::Difference:
        return eval<Mul>(*n.lhs) - eval<Mul>(*n.rhs);
    case Kind::Product:
        return eval<Mul>(*n.lhs) * eval<Mul>(*n.rhs);
    case Kind::Power:
        return pow(eval<Mul>(*n.lhs), static_cast<unsigned>(n.exponent));
    case Kind::Negation:
        return -eval<Mul>(*n.lhs);
    case Kind::Group:
        return eval<Mul>(*n.lhs);
    }
    throw std::logic_error("unreachable AST node kind");
}

inline WeylElement parse_weyl(std::string_view input) {
    return eval<WeylMul>(*parse(input, ParseMode::weyl).root);
}

inline PolyElement parse_poly(std::string_view input) {
    return eval<PolyMul>(*parse(input, ParseMode::poly).root);
}

} // namespace weyl
