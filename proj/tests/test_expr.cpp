#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"

using namespace wt;
using Kind = ExprNode::Kind;

TEST_CASE("parse builds the expected AST") {
    SECTION("product preserves written order") {
        const ExprAst ast = parse("y*x", ParseMode::weyl);
        REQUIRE(ast.root->kind == Kind::Product);
        REQUIRE(ast.root->lhs->kind == Kind::Generator);
        REQUIRE(ast.root->lhs->generator == 'y');
        REQUIRE(ast.root->rhs->generator == 'x');
        REQUIRE(eval<WeylMul>(*ast.root) == W("x*y + 1"));
    }
    SECTION("power of a group") {
        const ExprAst ast = parse("(x-y)^2", ParseMode::weyl);
        REQUIRE(ast.root->kind == Kind::Power);
        REQUIRE(ast.root->exponent == 2);
        REQUIRE(ast.root->lhs->kind == Kind::Group);
        REQUIRE(ast.root->lhs->lhs->kind == Kind::Difference);
    }
    SECTION("mixed expression") {
        const ExprAst ast = parse("3/2*x^2*y - 1", ParseMode::weyl);
        REQUIRE(ast.root->kind == Kind::Difference);
        REQUIRE(ast.root->rhs->kind == Kind::Rational);
        REQUIRE(ast.root->rhs->value == Q("1"));
        const ExprNode& prod = *ast.root->lhs;
        REQUIRE(prod.kind == Kind::Product);
        REQUIRE(prod.rhs->generator == 'y');
        REQUIRE(prod.lhs->kind == Kind::Product);
        REQUIRE(prod.lhs->lhs->value == Q("3/2"));
        REQUIRE(prod.lhs->rhs->kind == Kind::Power);
    }
}

TEST_CASE("evaluation follows precedence") {
    REQUIRE(W("2*x^2") == Q("2") * pow(WeylElement::x(), 2));
    REQUIRE(W("x + 2*y") == WeylElement::x() + Q("2") * WeylElement::y());
    REQUIRE(W("-(x^2)") == -pow(WeylElement::x(), 2));
    REQUIRE(W("(-x)^2") == pow(WeylElement::x(), 2));
    REQUIRE(W("2/4") == W("1/2"));
    REQUIRE(W("0/5").is_zero());
    REQUIRE(W("x^1000000") == WeylElement::monomial(1000000, 0));
}

TEST_CASE("whitespace is insignificant") {
    REQUIRE(W(" 3/2 * x ^ 2 * y - 1 ") == W("3/2*x^2*y - 1"));
    REQUIRE(P("( X - Y ) ^ 2") == P("(X-Y)^2"));
}

TEST_CASE("weyl and poly modes differ exactly by the relation") {
    REQUIRE(W("x*y - y*x") == W("-1"));
    REQUIRE(P("X*Y - Y*X").is_zero());
    REQUIRE(W("y*x") == W("x*y + 1"));
    REQUIRE(P("Y*X") == P("X*Y"));
}

TEST_CASE("parse errors carry case names and positions") {
    struct Case {
        const char* input;
        ParseMode mode;
        const char* name;
        std::size_t position;
    };
    const Case cases[] = {
        {"2x", ParseMode::weyl, "SyntaxError", 1},
        {"", ParseMode::weyl, "SyntaxError", 0},
        {"x+", ParseMode::weyl, "SyntaxError", 2},
        {"(x", ParseMode::weyl, "SyntaxError", 2},
        {"x*", ParseMode::weyl, "SyntaxError", 2},
        {"x^", ParseMode::weyl, "SyntaxError", 2},
        {"-x^2", ParseMode::weyl, "SyntaxError", 2},
        {"3/0", ParseMode::weyl, "SyntaxError", 2},
        {"x^-1", ParseMode::weyl, "InvalidExponent", 2},
        {"x^1/2", ParseMode::weyl, "InvalidExponent", 3},
        {"x^1000001", ParseMode::weyl, "InvalidExponent", 8},
        {"X", ParseMode::weyl, "WrongGenerator", 0},
        {"y + X", ParseMode::weyl, "WrongGenerator", 4},
        {"x", ParseMode::poly, "WrongGenerator", 0},
        {"$", ParseMode::weyl, "SyntaxError", 0},
    };
    for (const Case& c : cases) {
        INFO(c.input);
        try {
            parse(c.input, c.mode);
            FAIL("expected a ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.case_name() == c.name);
            REQUIRE(e.position() == c.position);
        }
    }
}

TEST_CASE("parse error messages are descriptive") {
    try {
        parse("-x^2", ParseMode::weyl);
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        REQUIRE(msg.find("position 2") != std::string::npos);
        REQUIRE(msg.find("(-x)^2") != std::string::npos);
    }
}

TEST_CASE("render produces the canonical form") {
    REQUIRE(render(W("1 + x*y")) == "x*y + 1");
    REQUIRE(render(WeylElement()) == "0");
    REQUIRE(render(W("-1/2*y")) == "-1/2*y");
    REQUIRE(render(P("Y*X + X")) == "X*Y + X");
    REQUIRE(render(W("y*x")) == "x*y + 1");
}

TEST_CASE("parse inverts render") {
    std::mt19937_64 rng(161);
    for (int trial = 0; trial < 40; ++trial) {
        const WeylElement w = random_element<WeylMul>(rng);
        REQUIRE(parse_weyl(render(w)) == w);
        const PolyElement p = random_element<PolyMul>(rng);
        REQUIRE(parse_poly(render(p)) == p);
    }
}
