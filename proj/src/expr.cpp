#include "errsumlab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "errsumlab/functions.hpp"
#include "errsumlab/series.hpp"

namespace errsum {

namespace {

ConstExpr node(NodeKind k, Rational v, ConstExpr a = nullptr, ConstExpr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->value = std::move(v);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

}  // namespace

ConstExpr lit(Rational v) { return node(NodeKind::Literal, std::move(v)); }
ConstExpr lit(long v) { return node(NodeKind::Literal, Rational(v)); }
ConstExpr exp_of(ConstExpr x) { return node(NodeKind::Exp, Rational(0), std::move(x)); }
ConstExpr sqrt_of(ConstExpr x) { return node(NodeKind::Sqrt, Rational(0), std::move(x)); }
ConstExpr sin_of(ConstExpr x) { return node(NodeKind::Sin, Rational(0), std::move(x)); }
ConstExpr cos_of(ConstExpr x) { return node(NodeKind::Cos, Rational(0), std::move(x)); }
ConstExpr neg(ConstExpr x) { return node(NodeKind::Neg, Rational(0), std::move(x)); }
ConstExpr add(ConstExpr a, ConstExpr b) { return node(NodeKind::Add, Rational(0), std::move(a), std::move(b)); }
ConstExpr sub(ConstExpr a, ConstExpr b) { return node(NodeKind::Sub, Rational(0), std::move(a), std::move(b)); }
ConstExpr mul(ConstExpr a, ConstExpr b) { return node(NodeKind::Mul, Rational(0), std::move(a), std::move(b)); }
ConstExpr div(ConstExpr a, ConstExpr b) { return node(NodeKind::Div, Rational(0), std::move(a), std::move(b)); }

bool same_ast(const ConstExpr& a, const ConstExpr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    if (a->kind == NodeKind::Literal) return a->value == b->value;
    return same_ast(a->a, b->a) && same_ast(a->b, b->b);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    Rational number;
    std::string ident;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& cur() const { return cur_; }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        cur_.offset = pos_;
        if (pos_ >= text_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': cur_.kind = Tok::Plus; ++pos_; return;
            case '-': cur_.kind = Tok::Minus; ++pos_; return;
            case '*': cur_.kind = Tok::Star; ++pos_; return;
            case '/': cur_.kind = Tok::Slash; ++pos_; return;
            case '^': cur_.kind = Tok::Caret; ++pos_; return;
            case '(': cur_.kind = Tok::LParen; ++pos_; return;
            case ')': cur_.kind = Tok::RParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string ipart = text_.substr(start, pos_ - start);
            std::string fpart;
            if (pos_ < text_.size() && text_[pos_] == '.') {
                std::size_t dot = pos_++;
                std::size_t fstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (pos_ == fstart)
                    throw ParseError(dot + 1, "digit", "expected digits after decimal point");
                fpart = text_.substr(fstart, pos_ - fstart);
            }
            Integer num(ipart + fpart, 10);
            cur_.kind = Tok::Number;
            cur_.number = Rational(num, pow10z(fpart.size()));
            cur_.number.canonicalize();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            cur_.kind = Tok::Ident;
            cur_.ident = text_.substr(start, pos_ - start);
            return;
        }
        throw ParseError(pos_, "token", std::string("unexpected character '") + c + "'");
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token cur_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ConstExpr parse_all() {
        ConstExpr e = parse_expr();
        if (lex_.cur().kind != Tok::End)
            throw ParseError(lex_.cur().offset, "end of input, '+', '-', '*', '/'",
                             "trailing input after expression");
        return e;
    }

private:
    Lexer lex_;

    void expect(Tok k, const char* what) {
        if (lex_.cur().kind != k)
            throw ParseError(lex_.cur().offset, what,
                             std::string("expected ") + what);
        lex_.advance();
    }

    ConstExpr parse_expr() {
        ConstExpr e = parse_term();
        for (;;) {
            if (lex_.cur().kind == Tok::Plus) {
                lex_.advance();
                e = add(e, parse_term());
            } else if (lex_.cur().kind == Tok::Minus) {
                lex_.advance();
                e = sub(e, parse_term());
            } else {
                return e;
            }
        }
    }

    ConstExpr parse_term() {
        ConstExpr e = parse_factor();
        for (;;) {
            if (lex_.cur().kind == Tok::Star) {
                lex_.advance();
                e = mul(e, parse_factor());
            } else if (lex_.cur().kind == Tok::Slash) {
                lex_.advance();
                e = div(e, parse_factor());
            } else {
                return e;
            }
        }
    }

    // '(' rational ')' with an optional leading minus; used only for exponents
    Rational parse_exponent() {
        expect(Tok::LParen, "'('");
        bool negate = false;
        if (lex_.cur().kind == Tok::Minus) {
            negate = true;
            lex_.advance();
        }
        if (lex_.cur().kind != Tok::Number)
            throw ParseError(lex_.cur().offset, "rational literal",
                             "exponent must be a rational literal");
        Rational r = lex_.cur().number;
        lex_.advance();
        if (lex_.cur().kind == Tok::Slash) {
            lex_.advance();
            if (lex_.cur().kind != Tok::Number)
                throw ParseError(lex_.cur().offset, "integer literal",
                                 "expected denominator after '/'");
            if (lex_.cur().number == 0)
                throw ParseError(lex_.cur().offset, "nonzero integer",
                                 "zero denominator in exponent");
            r /= lex_.cur().number;
            lex_.advance();
        }
        expect(Tok::RParen, "')'");
        return negate ? Rational(-r) : r;
    }

    ConstExpr parse_factor() {
        if (lex_.cur().kind == Tok::Minus) {
            lex_.advance();
            return neg(parse_factor());
        }
        bool bare_e = false;
        ConstExpr atom = parse_atom(bare_e);
        if (lex_.cur().kind == Tok::Caret) {
            std::size_t caret = lex_.cur().offset;
            if (!bare_e)
                throw ParseError(caret, "no '^' here",
                                 "'^' is only supported on base e with a rational exponent");
            lex_.advance();
            return exp_of(lit(parse_exponent()));
        }
        return atom;
    }

    ConstExpr parse_unary_call(NodeKind kind) {
        expect(Tok::LParen, "'('");
        ConstExpr arg = parse_expr();
        expect(Tok::RParen, "')'");
        return node(kind, Rational(0), arg);
    }

    ConstExpr parse_atom(bool& bare_e) {
        bare_e = false;
        const Token& t = lex_.cur();
        switch (t.kind) {
            case Tok::Number: {
                Rational v = t.number;
                lex_.advance();
                return lit(std::move(v));
            }
            case Tok::LParen: {
                lex_.advance();
                ConstExpr e = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: {
                std::string name = t.ident;
                std::size_t off = t.offset;
                lex_.advance();
                if (name == "e") {
                    bare_e = true;
                    return exp_of(lit(1));
                }
                if (name == "exp") return parse_unary_call(NodeKind::Exp);
                if (name == "sqrt") return parse_unary_call(NodeKind::Sqrt);
                if (name == "sin") return parse_unary_call(NodeKind::Sin);
                if (name == "cos") return parse_unary_call(NodeKind::Cos);
                throw ParseError(off, "'e', 'exp', 'sqrt', 'sin', 'cos'",
                                 "unknown identifier '" + name + "'");
            }
            default:
                throw ParseError(t.offset,
                                 "number, 'e', 'exp', 'sqrt', 'sin', 'cos', '(', '-'",
                                 "expected an atom");
        }
    }
};

}  // namespace

ConstExpr parse(const std::string& text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Unparser

namespace {

// true iff den = 2^a 5^b, i.e. the value has a finite decimal expansion of
// k = max(a, b) fractional digits
bool pow10_denominator(const Integer& den, unsigned long& k) {
    Integer d = den;
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
        ++fives;
    }
    k = std::max(twos, fives);
    return d == 1;
}

std::string literal_text(const Rational& v, int& level) {
    if (v.get_den() == 1) {
        level = 3;
        return v.get_num().get_str();
    }
    unsigned long k = 0;
    if (pow10_denominator(v.get_den(), k)) {
        level = 3;
        return decimal_truncated(v, static_cast<long>(k));
    }
    level = 1;  // prints as p/q, which reparses at term level
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string rational_exponent_text(const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

// level: 0 = expr, 1 = term, 2 = factor, 3 = atom
std::string print(const ConstExpr& e, int min_level) {
    int level = 3;
    std::string text;
    switch (e->kind) {
        case NodeKind::Literal:
            text = literal_text(e->value, level);
            break;
        case NodeKind::Exp:
            if (e->a->kind == NodeKind::Literal) {
                if (e->a->value == 1) {
                    text = "e";
                    level = 3;
                } else {
                    text = "e^(" + rational_exponent_text(e->a->value) + ")";
                    level = 2;
                }
            } else {
                text = "exp(" + print(e->a, 0) + ")";
            }
            break;
        case NodeKind::Sqrt: text = "sqrt(" + print(e->a, 0) + ")"; break;
        case NodeKind::Sin: text = "sin(" + print(e->a, 0) + ")"; break;
        case NodeKind::Cos: text = "cos(" + print(e->a, 0) + ")"; break;
        case NodeKind::Neg:
            text = "-" + print(e->a, 2);
            level = 2;
            break;
        case NodeKind::Add:
            text = print(e->a, 0) + "+" + print(e->b, 1);
            level = 0;
            break;
        case NodeKind::Sub:
            text = print(e->a, 0) + "-" + print(e->b, 1);
            level = 0;
            break;
        case NodeKind::Mul:
            text = print(e->a, 1) + "*" + print(e->b, 2);
            level = 1;
            break;
        case NodeKind::Div:
            text = print(e->a, 1) + "/" + print(e->b, 2);
            level = 1;
            break;
    }
    if (level < min_level) return "(" + text + ")";
    return text;
}

}  // namespace

std::string unparse(const ConstExpr& e) { return print(e, 0); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// internal signal: the current working precision cannot decide a guard
// condition (zero-straddling divisor, sign of a sqrt argument)
struct Inconclusive {
    const char* what;
};

long count_nodes(const ConstExpr& e) {
    if (!e) return 0;
    return 1 + count_nodes(e->a) + count_nodes(e->b);
}

Enclosure eval_node(const ConstExpr& e, Precision work) {
    const unsigned long bits = cap_bits_for(work.digits);
    switch (e->kind) {
        case NodeKind::Literal:
            return Enclosure::point(e->value);
        case NodeKind::Neg:
            return -eval_node(e->a, work);
        case NodeKind::Add:
            return cap_denominators(eval_node(e->a, work) + eval_node(e->b, work), bits);
        case NodeKind::Sub:
            return cap_denominators(eval_node(e->a, work) - eval_node(e->b, work), bits);
        case NodeKind::Mul:
            return cap_denominators(eval_node(e->a, work) * eval_node(e->b, work), bits);
        case NodeKind::Div: {
            Enclosure num = eval_node(e->a, work);
            Enclosure den = eval_node(e->b, work);
            if (den.contains_zero()) {
                if (den.is_point()) throw DomainError("division by zero");
                throw Inconclusive{"divisor enclosure straddles zero"};
            }
            return cap_denominators(num / den, bits);
        }
        case NodeKind::Exp: {
            Enclosure x = eval_node(e->a, work);
            if (x.is_point()) return exp_enclosure(x.lo, work);
            Enclosure lo = exp_enclosure(x.lo, work);
            Enclosure hi = exp_enclosure(x.hi, work);
            return Enclosure(lo.lo, hi.hi);
        }
        case NodeKind::Sqrt: {
            Enclosure x = eval_node(e->a, work);
            if (x.hi < 0) throw DomainError("sqrt of a negative value");
            if (x.lo < 0) {
                if (x.is_point()) throw DomainError("sqrt of a negative value");
                throw Inconclusive{"sqrt argument enclosure straddles zero"};
            }
            Enclosure lo = sqrt_enclosure(x.lo, work);
            Enclosure hi = sqrt_enclosure(x.hi, work);
            return Enclosure(lo.lo, hi.hi);
        }
        case NodeKind::Sin:
        case NodeKind::Cos: {
            Enclosure x = eval_node(e->a, work);
            bool want_sin = (e->kind == NodeKind::Sin);
            if (x.is_point()) {
                auto sc = sin_cos_enclosure(x.lo, work);
                return want_sin ? sc.first : sc.second;
            }
            // widen the midpoint value by the argument radius (|sin'|,|cos'| <= 1)
            Rational m = x.mid();
            Rational radius = x.width() / 2;
            auto sc = sin_cos_enclosure(m, work);
            Enclosure v = want_sin ? sc.first : sc.second;
            Enclosure widened(v.lo - radius, v.hi + radius);
            static const Enclosure unit(Rational(-1), Rational(1));
            return intersect(widened, unit);
        }
    }
    throw DomainError("eval: unknown node kind");
}

}  // namespace

Enclosure eval_enclosure(const ConstExpr& e, Precision prec) {
    const Rational target = prec.target_width();
    const int cap = max_doublings();
    long d = prec.digits + 10 + count_nodes(e);
    Enclosure best = Enclosure(Rational(0), Rational(0));
    bool have_best = false;
    for (int attempt = 0; attempt <= cap; ++attempt, d *= 2) {
        try {
            Enclosure r = eval_node(e, Precision(d));
            if (!have_best || r.width() < best.width()) {
                best = r;
                have_best = true;
            }
            if (r.width() <= target) return r;
        } catch (const Inconclusive&) {
            // escalate
        }
    }
    if (!have_best)
        throw PrecisionFailure("eval: could not separate enclosure from singular point", best);
    throw PrecisionFailure("eval: escalation cap exceeded", best);
}

}  // namespace errsum
