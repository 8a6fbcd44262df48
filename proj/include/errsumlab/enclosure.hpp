#ifndef ERRSUMLAB_ENCLOSURE_HPP
#define ERRSUMLAB_ENCLOSURE_HPP

#include "errsumlab/rational.hpp"

namespace errsum {

// Closed rational interval [lo, hi] guaranteed to contain an exact real
// value. Every operation is outward-conservative: the true result of the
// underlying real operation lies in the output interval.
struct Enclosure {
    Rational lo, hi;

    Enclosure() : lo(0), hi(0) {}
    Enclosure(Rational l, Rational h);

    static Enclosure point(const Rational& v) { return Enclosure(v, v); }
    static Enclosure hull(const Enclosure& a, const Enclosure& b);

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool strictly_positive() const { return lo > 0; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
// Throws DomainError when b contains zero as an exact point interval; the
// caller decides how to treat inconclusive (nonzero-width) straddles.
Enclosure operator/(const Enclosure& a, const Enclosure& b);

Enclosure operator+(const Enclosure& a, const Rational& b);
Enclosure operator-(const Enclosure& a, const Rational& b);
Enclosure operator*(const Enclosure& a, const Rational& b);
Enclosure operator/(const Enclosure& a, const Rational& b);

Enclosure abs(const Enclosure& a);
Enclosure square(const Enclosure& a);
Enclosure reciprocal(const Enclosure& a);
Enclosure intersect(const Enclosure& a, const Enclosure& b);

// Outward rounding onto the dyadic grid of spacing 2^(-bits); only applied
// when an endpoint's denominator exceeds 2^bits. Keeps denominators bounded
// in long series without losing conservativeness.
Enclosure cap_denominators(const Enclosure& a, unsigned long bits);

// Dyadic bit budget matching a digit target: 16x the precision in bits.
unsigned long cap_bits_for(long digits);

// Raised when the escalation cap is hit before the target width is reached;
// carries the best enclosure found.
class PrecisionFailure : public std::runtime_error {
public:
    PrecisionFailure(const std::string& what, Enclosure best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const Enclosure& best() const { return best_; }

private:
    Enclosure best_;
};

}  // namespace errsum

#endif
