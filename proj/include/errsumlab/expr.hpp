#ifndef ERRSUMLAB_EXPR_HPP
#define ERRSUMLAB_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "errsumlab/enclosure.hpp"

namespace errsum {

// Closed language of real-constant expressions: rationals, exp, sqrt,
// sin, cos and field operations. `e` desugars to Exp(1), `e^(p/q)` to
// Exp(p/q); '^' is not available on any other base.
enum class NodeKind { Literal, Exp, Sqrt, Sin, Cos, Neg, Add, Sub, Mul, Div };

struct ExprNode;
using ConstExpr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    NodeKind kind;
    Rational value;      // Literal only
    ConstExpr a, b;      // operands
};

ConstExpr lit(Rational v);
ConstExpr lit(long v);
ConstExpr exp_of(ConstExpr x);
ConstExpr sqrt_of(ConstExpr x);
ConstExpr sin_of(ConstExpr x);
ConstExpr cos_of(ConstExpr x);
ConstExpr neg(ConstExpr x);
ConstExpr add(ConstExpr a, ConstExpr b);
ConstExpr sub(ConstExpr a, ConstExpr b);
ConstExpr mul(ConstExpr a, ConstExpr b);
ConstExpr div(ConstExpr a, ConstExpr b);

bool same_ast(const ConstExpr& a, const ConstExpr& b);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string expected, const std::string& what)
        : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}
    std::size_t offset() const { return offset_; }        // 0-based character offset
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom | '-' factor | 'e' '^' '(' rational ')'
//   atom   := rational | 'e' | 'exp(' expr ')' | 'sqrt(' expr ')'
//           | 'sin(' expr ')' | 'cos(' expr ')' | '(' expr ')'
// Rational literals: integer, p/q handled via division, decimals parsed
// exactly as p/10^k. Whitespace insignificant.
ConstExpr parse(const std::string& text);

std::string unparse(const ConstExpr& e);

// Enclosure of the expression's exact real value, width <= 10^(-D).
// DomainError on division by a zero-containing interval or sqrt of a
// negative value; PrecisionFailure when escalation cannot separate an
// interval from a singular point.
Enclosure eval_enclosure(const ConstExpr& e, Precision prec);

}  // namespace errsum

#endif
