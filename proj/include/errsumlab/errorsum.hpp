#ifndef ERRSUMLAB_ERRORSUM_HPP
#define ERRSUMLAB_ERRORSUM_HPP

#include "errsumlab/contfrac.hpp"

namespace errsum {

struct ErrorSumResult {
    Enclosure value;
    long terms_used;
    Rational tail_bound;
};

// E(alpha) = sum_n |q_n alpha - p_n| over the convergents of alpha's regular
// continued fraction. Truncates at N with the tail bounded by
// 2 (1/q_{N+1} + 1/q_{N+2}) via q_{k+2} >= 2 q_k; each retained term is an
// interval in alpha's enclosure.
ErrorSumResult error_sum_abs(const ConstExpr& expr, Precision prec);

// sum_n (q_n alpha - p_n) x^n for |x| <= 3/2. Geometric tail via
// |q_n alpha - p_n| < 1/q_{n+1} and Fibonacci growth (F(j) >= (8/5)^(j-2)).
Enclosure error_sum_power_series(const ConstExpr& expr, const Rational& x, Precision prec);

// Integral side of the six residual formulas: p_m - alpha q_m for m = 3n+j,
// alpha the family value. Evaluated as exact Beta-function series
// (int_0^1 x^m (x-1)^w dx = (-1)^w m! w! / (m+w+1)!), independent of the
// elementary-function enclosures.
Enclosure komatsu_residual(const HurwitzFamily& family, long n, int j, Precision prec);

// A(l, s) = sum_n (-1)^n / ((n+1)! (2n^2+7n+3) (l s)^n), l, s > 0.
Enclosure a_series(const Rational& ell, const Rational& s, Precision prec);

// Closed form, with c = ls:
//   A = -c/2 + c^3/5 + (1/5) c (2 - c - c^2) e^(-1/c) + (4/5) int_0^1 e^(-t^2/c) dt
// derived from the partial-fraction split of 1/(2n^2+7n+3); the polynomial
// part reduces to -3c/10 at c = 1.
Enclosure a_closed(const Rational& ell, const Rational& s, Precision prec);

// Expression for the family value: s e^(1/(l s)) resp. s e^(1/s).
ConstExpr hurwitz_value_expr(const HurwitzFamily& family);

}  // namespace errsum

#endif
