#ifndef ERRSUMLAB_SERIES_HPP
#define ERRSUMLAB_SERIES_HPP

#include <functional>

#include "errsumlab/enclosure.hpp"

namespace errsum {

using TermFn = std::function<Rational(long)>;

// Sum of an infinite series whose terms alternate in sign with strictly
// decreasing absolute value from index n0 onward (caller's guarantee).
// Terms up to the truncation point are accumulated exactly; the tail after
// truncating at N is bounded by |term(N+1)|, so the partial sum and the
// partial sum plus the next term bracket the limit.
Enclosure sum_alternating(const TermFn& term, long n0, Precision prec,
                          long max_terms = 200000);

// Sum of a series with nonnegative terms where ratio_bound(k) >= term(m+1)/term(m)
// for every m >= k and the bound is < 1 from some point on. After summing
// through index k the tail is at most term(k) * r / (1 - r) with r = ratio_bound(k).
Enclosure sum_positive(const TermFn& term, const TermFn& ratio_bound, Precision prec,
                       long max_terms = 200000);

// Escalation cap for precision scheduling: number of digit doublings allowed
// when a composite computation misses its target width. Default 6, overridable
// via ERRSUMLAB_MAX_DOUBLINGS.
int max_doublings();

// Runs f at geometrically escalating working precision (D, 2D, 4D, ...)
// until the result width meets the target; throws PrecisionFailure with the
// best enclosure otherwise. A small guard is added to the first attempt so
// that escalation is rarely needed.
Enclosure refine_to(Precision prec, const std::function<Enclosure(Precision)>& f,
                    long guard_digits = 10);

}  // namespace errsum

#endif
