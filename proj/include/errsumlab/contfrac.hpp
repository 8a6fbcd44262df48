#ifndef ERRSUMLAB_CONTFRAC_HPP
#define ERRSUMLAB_CONTFRAC_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "errsumlab/expr.hpp"

namespace errsum {

// One p_n/q_n pair from the convergent recurrence.
struct Convergent {
    long index;   // n >= 0
    Integer p;
    Integer q;    // > 0, gcd(p, q) = 1
};

// Generator of partial quotients a0, a1, ...; a0 >= 0, a_n >= 1 for n >= 1.
// Finite streams signal exhaustion with nullopt. Single-consumer.
class QuotientStream {
public:
    virtual ~QuotientStream() = default;
    virtual std::optional<Integer> next() = 0;
};

class VectorQuotients final : public QuotientStream {
public:
    explicit VectorQuotients(std::vector<Integer> qs) : qs_(std::move(qs)) {}
    std::optional<Integer> next() override {
        if (pos_ >= qs_.size()) return std::nullopt;
        return qs_[pos_++];
    }

private:
    std::vector<Integer> qs_;
    std::size_t pos_ = 0;
};

// The two quasi-periodic families of Komatsu's theorem:
//   F1: s e^(1/(l s)) = [s; l-1, 1, 2s-1, 3l-1, 1, 2s-1, 5l-1, ...], l >= 2, s >= 1
//   F2: s e^(1/s)     = [s+1; 2s-1, 2, 1, 2s-1, 4, 1, ...],          s >= 1
struct HurwitzFamily {
    enum class Tag { F1, F2 };
    Tag tag;
    long ell;  // F1 only
    long s;

    static HurwitzFamily f1(long ell, long s);
    static HurwitzFamily f2(long s);
};

std::unique_ptr<QuotientStream> hurwitz_stream(const HurwitzFamily& family);

// p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2},
// seeded p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1.
struct ConvergentAccumulator {
    Integer p_prev{1}, p_prev2{0};
    Integer q_prev{0}, q_prev2{1};
    long n = -1;
    Convergent push(const Integer& a);
};

// First N convergents (fewer when the stream terminates earlier).
std::vector<Convergent> convergents_from_quotients(QuotientStream& quotients, long count);

// Rigorous digit extraction from an expression's enclosure: each quotient is
// emitted only when floor(1/frac) is constant across the whole interval;
// otherwise evaluation precision is doubled (cap 20 doublings). Rational
// values produce the finite canonical expansion (last quotient >= 2).
class CfExtractor {
public:
    explicit CfExtractor(ConstExpr expr);

    // grows the materialized quotient list to n entries if possible; a finite
    // expansion may stop earlier
    void ensure_terms(std::size_t n);
    // extends until the denominator of the (N+2)th convergent reaches `bound`
    // (or the expansion ends)
    void ensure_tail_denominator(const Integer& bound);

    const std::vector<Integer>& quotients() const { return quotients_; }
    const std::vector<Convergent>& convergents() const { return convergents_; }
    bool finite() const { return finite_; }
    // enclosure of the underlying value
    Enclosure value(Precision prec) const;

private:
    void extract_pass(long digits);
    void grow(std::size_t target_terms, const Integer* q_bound);

    ConstExpr expr_;
    std::vector<Integer> quotients_;
    std::vector<Convergent> convergents_;
    bool finite_ = false;
    long digits_ = 48;
};

// Convenience wrapper: first `count` canonical partial quotients of the
// expression's value (fewer for rationals with short expansions).
std::vector<Integer> extract_cf(const ConstExpr& expr, long count);

// Finite truncations of a generalized continued fraction
// a1/(b1 + a2/(b2 + ... )) with positive elements, indices 1-based.
// Consecutive truncations bracket the limit, so the result is the interval
// hull of the N-term and (N+1)-term truncations.
Enclosure eval_generalized_cf(const std::function<Rational(long)>& numerator,
                              const std::function<Rational(long)>& denominator,
                              long terms);

// Exact value of a finite generalized continued fraction given as element
// lists (all positive); width-0 result.
Enclosure eval_generalized_cf_finite(const std::vector<Rational>& numerators,
                                     const std::vector<Rational>& denominators);

// Elements of the conjectured expansion of integral_0^1 e^(-t^2) dt - 3/8:
// top level 5/4 over 3, then n(n+2)^2(2n-1)^2 over (2n+5)(n^2+n+1).
Rational erfint_numerator(long index);
Rational erfint_denominator(long index);

}  // namespace errsum

#endif
