#include "errsumlab/functions.hpp"

namespace errsum {

namespace {

// Taylor enclosure of e^y for |y| <= 1; tail after N terms bounded by
// 3 |y|^(N+1) / (N+1)!.
Enclosure exp_taylor_unit(const Rational& y, const Rational& target) {
    Rational sum(0);
    Rational term(1);  // y^k / k!
    for (long k = 0;; ++k) {
        sum += term;
        term = term * y / (k + 1);
        Rational bound = 3 * abs_q(term);
        if (bound <= target) return Enclosure(sum - bound, sum + bound);
        if (k > 100000) throw PrecisionFailure("exp: iteration cap", Enclosure::point(sum));
    }
}

Enclosure exp_attempt(const Rational& x, Precision work) {
    Rational y = x;
    long halvings = 0;
    while (abs_q(y) > 1) {
        y /= 2;
        ++halvings;
    }
    // extra digits to absorb the squaring amplification
    long magnitude = mpz_get_si(ceil_q(abs_q(x)).get_mpz_t());
    long inner = work.digits + 2 * halvings + magnitude + 2;
    // capping keeps denominators from squaring away with each halving undone
    const unsigned long bits = cap_bits_for(inner);
    Enclosure e = cap_denominators(exp_taylor_unit(y, pow10_inv(inner)), bits);
    for (long i = 0; i < halvings; ++i) e = cap_denominators(square(e), bits);
    return e;
}

}  // namespace

Enclosure exp_enclosure(const Rational& x, Precision prec) {
    if (x == 0) return Enclosure::point(Rational(1));
    return refine_to(prec, [&](Precision w) { return exp_attempt(x, w); });
}

Enclosure sqrt_enclosure(const Rational& r, Precision prec) {
    if (r < 0) throw DomainError("sqrt of negative rational");
    if (r == 0) return Enclosure::point(Rational(0));
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    Integer scale = pow10z(static_cast<unsigned long>(prec.digits + 1));
    // sqrt(p/q) = sqrt(p*q) / q, located on the grid 1/(q*scale)
    Integer a = p * q * scale * scale;
    Integer t;
    mpz_sqrt(t.get_mpz_t(), a.get_mpz_t());
    Integer den = q * scale;
    Rational lo(t, den);
    lo.canonicalize();
    if (t * t == a) return Enclosure::point(lo);
    Rational hi(t + 1, den);
    hi.canonicalize();
    return Enclosure(lo, hi);
}

namespace {

// Alternating Taylor sums for |y| <= 1 with the Leibniz bracket.
Enclosure sin_taylor_unit(const Rational& y, const Rational& target) {
    Rational sum(0);
    Rational term = y;  // (-1)^k y^(2k+1) / (2k+1)!
    for (long k = 0;; ++k) {
        if (abs_q(term) <= target)
            return Enclosure::hull(Enclosure::point(sum), Enclosure::point(sum + term));
        sum += term;
        term = -term * y * y / ((2 * k + 2) * (2 * k + 3));
        if (k > 100000) throw PrecisionFailure("sin: iteration cap", Enclosure::point(sum));
    }
}

Enclosure cos_taylor_unit(const Rational& y, const Rational& target) {
    Rational sum(0);
    Rational term(1);  // (-1)^k y^(2k) / (2k)!
    for (long k = 0;; ++k) {
        if (abs_q(term) <= target)
            return Enclosure::hull(Enclosure::point(sum), Enclosure::point(sum + term));
        sum += term;
        term = -term * y * y / ((2 * k + 1) * (2 * k + 2));
        if (k > 100000) throw PrecisionFailure("cos: iteration cap", Enclosure::point(sum));
    }
}

const Enclosure kUnitRange(Rational(-1), Rational(1));

std::pair<Enclosure, Enclosure> sin_cos_attempt(const Rational& x, Precision work) {
    Rational y = x;
    long halvings = 0;
    while (abs_q(y) > 1) {
        y /= 2;
        ++halvings;
    }
    long inner = work.digits + 2 * halvings + 2;
    Rational target = pow10_inv(inner);
    const unsigned long bits = cap_bits_for(inner);
    Enclosure s = cap_denominators(sin_taylor_unit(y, target), bits);
    Enclosure c = cap_denominators(cos_taylor_unit(y, target), bits);
    for (long i = 0; i < halvings; ++i) {
        Enclosure s2 = s * c * Rational(2);
        Enclosure c2 = Enclosure::point(Rational(1)) - square(s) * Rational(2);
        s = cap_denominators(intersect(s2, kUnitRange), bits);
        c = cap_denominators(intersect(c2, kUnitRange), bits);
    }
    return {s, c};
}

}  // namespace

std::pair<Enclosure, Enclosure> sin_cos_enclosure(const Rational& x, Precision prec) {
    if (x == 0)
        return {Enclosure::point(Rational(0)), Enclosure::point(Rational(1))};
    const Rational target = prec.target_width();
    const int cap = max_doublings();
    long d = prec.digits + 10;
    std::pair<Enclosure, Enclosure> best = sin_cos_attempt(x, Precision(d));
    for (int attempt = 0; attempt <= cap; ++attempt) {
        if (best.first.width() <= target && best.second.width() <= target) return best;
        d *= 2;
        best = sin_cos_attempt(x, Precision(d));
    }
    throw PrecisionFailure("sin_cos: escalation cap exceeded", best.first);
}

Enclosure gauss_integral(const Rational& c, Precision prec) {
    if (c <= 0) throw DomainError("gauss_integral: c must be positive");
    long n0 = mpz_get_si(ceil_q(Rational(Rational(1) / c)).get_mpz_t());
    auto term = [&c](long n) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        Integer cn_num, cn_den;
        mpz_pow_ui(cn_num.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(cn_den.get_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(n));
        Rational t(cn_den, fact * (2 * n + 1) * cn_num);
        t.canonicalize();
        return (n % 2 == 0) ? t : Rational(-t);
    };
    return sum_alternating(term, n0, prec);
}

}  // namespace errsum
