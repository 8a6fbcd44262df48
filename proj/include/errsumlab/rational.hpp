#ifndef ERRSUMLAB_RATIONAL_HPP
#define ERRSUMLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace errsum {

// Exact arbitrary-size arithmetic. mpq_class already maintains the
// invariants we need: positive denominator, always stored reduced.
using Integer = mpz_class;
using Rational = mpq_class;

class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Target enclosure width 10^(-digits).
struct Precision {
    long digits;

    explicit Precision(long d) : digits(d) {
        if (d < 1) throw DomainError("Precision: digits must be >= 1");
    }
    Rational target_width() const;
};

Integer pow10z(unsigned long k);

// 10^(-d) as an exact rational.
Rational pow10_inv(long d);

Integer floor_q(const Rational& x);
Integer ceil_q(const Rational& x);

Rational abs_q(const Rational& x);

// Decimal expansion of x truncated toward zero to `frac_digits` fractional
// digits. Never prints an unverified digit when fed an enclosure midpoint
// at the agreed-digit count.
std::string decimal_truncated(const Rational& x, long frac_digits);

// Largest k >= 0 with w <= 10^(-k); 0 if w > 1. `cap` bounds the search.
long width_digits(const Rational& w, long cap);

}  // namespace errsum

#endif
