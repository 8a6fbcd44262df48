#ifndef ERRSUMLAB_FUNCTIONS_HPP
#define ERRSUMLAB_FUNCTIONS_HPP

#include <utility>

#include "errsumlab/series.hpp"

namespace errsum {

// e^x for rational x, width <= 10^(-D). Taylor series with an explicit tail
// bound; arguments with |x| > 1 are halved first and the result squared back.
Enclosure exp_enclosure(const Rational& x, Precision prec);

// sqrt(r) for rational r >= 0, width <= 10^(-D). Exact for perfect squares
// (of numerator and denominator); otherwise integer-sqrt bisection on a
// scaled numerator.
Enclosure sqrt_enclosure(const Rational& r, Precision prec);

// (sin x, cos x), each of width <= 10^(-D). Alternating Taylor series for
// |x| <= 1; larger arguments are halved and rebuilt with the double-angle
// identities.
std::pair<Enclosure, Enclosure> sin_cos_enclosure(const Rational& x, Precision prec);

// I(c) = integral_0^1 e^(-t^2/c) dt = sum_n (-1)^n / (n! (2n+1) c^n), c > 0.
// This is the only route to erf-type values in the library: closed forms
// carrying sqrt(pi)*erf(...) are rewritten through I(c) before evaluation.
Enclosure gauss_integral(const Rational& c, Precision prec);

}  // namespace errsum

#endif
