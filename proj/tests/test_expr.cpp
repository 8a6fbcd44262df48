#include <doctest.h>

#include <cmath>
#include <random>

#include "errsumlab/expr.hpp"
#include "test_util.hpp"

using namespace errsum;
using errsum::test::encloses_decimal;

TEST_CASE("parse: e desugars to Exp(1)") {
    ConstExpr got = parse("e");
    CHECK(same_ast(got, exp_of(lit(1))));
}

TEST_CASE("parse: e^(p/q) desugars to Exp(p/q)") {
    CHECK(same_ast(parse("e^(1/6)"), exp_of(lit(Rational(1, 6)))));
    CHECK(same_ast(parse("2*e^(1/6)"), mul(lit(2), exp_of(lit(Rational(1, 6))))));
    CHECK(same_ast(parse("e^(-2)"), exp_of(lit(-2))));
}

TEST_CASE("parse: golden ratio expression") {
    ConstExpr want = div(add(lit(1), sqrt_of(lit(5))), lit(2));
    CHECK(same_ast(parse("(1+sqrt(5))/2"), want));
    CHECK(same_ast(parse(" ( 1 + sqrt( 5 ) ) / 2 "), want));
}

TEST_CASE("parse: decimals are exact") {
    CHECK(same_ast(parse("0.25"), lit(Rational(1, 4))));
    CHECK(same_ast(parse("3.14"), lit(Rational(157, 50))));
    CHECK(same_ast(parse("-0.5"), neg(lit(Rational(1, 2)))));
}

TEST_CASE("parse: precedence and associativity") {
    CHECK(same_ast(parse("1+2*3"), add(lit(1), mul(lit(2), lit(3)))));
    CHECK(same_ast(parse("1-2-3"), sub(sub(lit(1), lit(2)), lit(3))));
    CHECK(same_ast(parse("8/4/2"), div(div(lit(8), lit(4)), lit(2))));
    CHECK(same_ast(parse("exp(sin(1)+cos(1))"),
                   exp_of(add(sin_of(lit(1)), cos_of(lit(1))))));
}

TEST_CASE("parse errors carry an offset and expectation") {
    CHECK_THROWS_AS(parse("e^"), ParseError);
    try {
        parse("e^");
    } catch (const ParseError& pe) {
        CHECK(pe.offset() == 2);
        CHECK(!pe.expected().empty());
    }
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("1+"), ParseError);
    CHECK_THROWS_AS(parse("sqrt(2"), ParseError);
    CHECK_THROWS_AS(parse("2^(1/2)"), ParseError);  // '^' only on base e
    CHECK_THROWS_AS(parse("foo(1)"), ParseError);
    CHECK_THROWS_AS(parse("1 2"), ParseError);
}

TEST_CASE("unparse round-trips the AST through the parser") {
    std::vector<std::string> sources = {
        "e",
        "2*e^(1/6)",
        "(1+sqrt(5))/2",
        "e^(-1)",
        "sin(1/2)*cos(1/2)",
        "exp(1/3)-sqrt(7)/2",
        "-(1+2)/3",
        "0.125+1/3",
    };
    for (const auto& s : sources) {
        ConstExpr ast = parse(s);
        CHECK(same_ast(parse(unparse(ast)), ast));
    }
}

namespace {

// rough double-precision value; used to discard random trees whose exact
// evaluation would be astronomically large (e.g. exp(exp(exp(9))))
double estimate(const ConstExpr& e) {
    switch (e->kind) {
        case NodeKind::Literal: return e->value.get_d();
        case NodeKind::Exp: return std::exp(estimate(e->a));
        case NodeKind::Sqrt: return std::sqrt(estimate(e->a));
        case NodeKind::Sin: return std::sin(estimate(e->a));
        case NodeKind::Cos: return std::cos(estimate(e->a));
        case NodeKind::Neg: return -estimate(e->a);
        case NodeKind::Add: return estimate(e->a) + estimate(e->b);
        case NodeKind::Sub: return estimate(e->a) - estimate(e->b);
        case NodeKind::Mul: return estimate(e->a) * estimate(e->b);
        default: return estimate(e->a) / estimate(e->b);
    }
}

bool tame(const ConstExpr& e) {
    double v = estimate(e);
    if (!std::isfinite(v) || std::fabs(v) > 1e8) return false;
    if (e->a && !tame(e->a)) return false;
    if (e->b && !tame(e->b)) return false;
    return true;
}

ConstExpr random_ast(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 9);
    std::uniform_int_distribution<long> small(0, 9), den(1, 9);
    switch (pick(rng)) {
        case 0: return lit(small(rng));
        case 1: {
            Rational r(small(rng), den(rng));
            r.canonicalize();
            return lit(r);
        }
        case 2: return exp_of(random_ast(rng, depth - 1));
        case 3: return sqrt_of(random_ast(rng, depth - 1));
        case 4: return sin_of(random_ast(rng, depth - 1));
        case 5: return cos_of(random_ast(rng, depth - 1));
        case 6: return neg(random_ast(rng, depth - 1));
        case 7: return add(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 8: return sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        default: return mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("unparse/parse round-trip on random expressions") {
    // a rational literal like 5/3 prints as a division, so unparse of a raw
    // AST need not reparse to the same tree; the guarantee is on strings:
    // unparse(parse(t)) reparses to an AST identical to parse(t)
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        std::string text = unparse(random_ast(rng, 4));
        ConstExpr first = parse(text);
        CAPTURE(text);
        CHECK(same_ast(parse(unparse(first)), first));
    }
}

TEST_CASE("eval_enclosure examples") {
    CHECK(encloses_decimal(eval_enclosure(parse("e"), Precision(15)),
                           "2.718281828459045"));
    CHECK(encloses_decimal(eval_enclosure(parse("(1+sqrt(5))/2"), Precision(15)),
                           "1.618033988749894"));
    CHECK(encloses_decimal(eval_enclosure(parse("2*e^(1/6)"), Precision(12)),
                           "2.362720825731"));
    CHECK(encloses_decimal(eval_enclosure(parse("sin(1/2)"), Precision(12)),
                           "0.479425538604"));
    CHECK(encloses_decimal(eval_enclosure(parse("e^(-1)*e"), Precision(12)), "1"));
}

TEST_CASE("rational-only expressions evaluate to width-zero points") {
    Enclosure e = eval_enclosure(parse("(3/7+0.5)*14-2"), Precision(5));
    CHECK(e.is_point());
    CHECK(e.lo == Rational(11));
}

TEST_CASE("eval_enclosure meets the requested width") {
    for (long d : {5L, 20L, 40L}) {
        Enclosure e = eval_enclosure(parse("exp(sqrt(2))+sin(1/3)"), Precision(d));
        CHECK(e.width() <= pow10_inv(d));
    }
}

TEST_CASE("eval_enclosure domain errors") {
    CHECK_THROWS_AS(eval_enclosure(parse("1/(2-2)"), Precision(5)), DomainError);
    CHECK_THROWS_AS(eval_enclosure(parse("sqrt(1-2)"), Precision(5)), DomainError);
}

TEST_CASE("eval_enclosure nests as precision increases") {
    std::mt19937 rng(29);
    for (int i = 0; i < 60; ++i) {
        ConstExpr ast = random_ast(rng, 3);
        if (!tame(ast)) continue;
        Enclosure coarse, fine;
        try {
            coarse = eval_enclosure(ast, Precision(8));
            fine = eval_enclosure(ast, Precision(18));
        } catch (const DomainError&) {
            continue;  // negative radicand / zero divisor in a random tree
        } catch (const PrecisionFailure&) {
            continue;
        }
        CAPTURE(unparse(ast));
        CHECK(coarse.contains(fine));
    }
}
