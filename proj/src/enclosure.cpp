#include "errsumlab/enclosure.hpp"

#include <algorithm>

namespace errsum {

Enclosure::Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw DomainError("Enclosure: lo > hi");
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
    return Enclosure(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo + b.lo, a.hi + b.hi);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo - b.hi, a.hi - b.lo);
}

Enclosure operator-(const Enclosure& a) { return Enclosure(-a.hi, -a.lo); }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Enclosure(std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4)));
}

Enclosure reciprocal(const Enclosure& a) {
    if (a.contains_zero()) throw DomainError("reciprocal: interval contains zero");
    return Enclosure(Rational(1) / a.hi, Rational(1) / a.lo);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    return a * reciprocal(b);
}

Enclosure operator+(const Enclosure& a, const Rational& b) {
    return Enclosure(a.lo + b, a.hi + b);
}

Enclosure operator-(const Enclosure& a, const Rational& b) {
    return Enclosure(a.lo - b, a.hi - b);
}

Enclosure operator*(const Enclosure& a, const Rational& b) {
    if (b >= 0) return Enclosure(a.lo * b, a.hi * b);
    return Enclosure(a.hi * b, a.lo * b);
}

Enclosure operator/(const Enclosure& a, const Rational& b) {
    if (b == 0) throw DomainError("division by zero");
    return a * Rational(Rational(1) / b);
}

Enclosure abs(const Enclosure& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return Enclosure(0, std::max(Rational(-a.lo), a.hi));
}

Enclosure square(const Enclosure& a) {
    Enclosure p = a * a;
    if (a.contains_zero() && p.lo < 0) p.lo = 0;
    if (p.lo < 0 && (a.lo >= 0 || a.hi <= 0)) p.lo = 0;
    return p;
}

Enclosure intersect(const Enclosure& a, const Enclosure& b) {
    if (!a.intersects(b)) throw DomainError("intersect: disjoint intervals");
    return Enclosure(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

namespace {

Rational round_down_dyadic(const Rational& x, unsigned long bits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rational r(floor_q(Rational(x * scale)), scale);
    r.canonicalize();
    return r;
}

Rational round_up_dyadic(const Rational& x, unsigned long bits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rational r(ceil_q(Rational(x * scale)), scale);
    r.canonicalize();
    return r;
}

}  // namespace

Enclosure cap_denominators(const Enclosure& a, unsigned long bits) {
    size_t lo_bits = mpz_sizeinbase(a.lo.get_den_mpz_t(), 2);
    size_t hi_bits = mpz_sizeinbase(a.hi.get_den_mpz_t(), 2);
    if (lo_bits <= bits && hi_bits <= bits) return a;
    return Enclosure(lo_bits > bits ? round_down_dyadic(a.lo, bits) : a.lo,
                     hi_bits > bits ? round_up_dyadic(a.hi, bits) : a.hi);
}

unsigned long cap_bits_for(long digits) {
    if (digits < 1) digits = 1;
    // ~3.33 bits per decimal digit, times the 16x budget
    return static_cast<unsigned long>(16 * ((10 * digits) / 3 + 2));
}

}  // namespace errsum
