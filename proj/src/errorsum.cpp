#include "errsumlab/errorsum.hpp"

#include <optional>

#include "errsumlab/functions.hpp"
#include "errsumlab/series.hpp"

namespace errsum {

namespace {

long decimal_length(const Integer& z) {
    return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 10));
}

}  // namespace

ErrorSumResult error_sum_abs(const ConstExpr& expr, Precision prec) {
    const long D = prec.digits;
    const Rational target = prec.target_width();
    CfExtractor ext(expr);

    // head start: the tail wants q_{N+1} around 8/target
    ext.ensure_tail_denominator(Integer(16 * pow10z(static_cast<unsigned long>(D + 1))));

    // grow the expansion until the tail bound is comfortably below target
    long last = -1;  // last retained index N
    Rational tail(0);
    for (;;) {
        const auto& conv = ext.convergents();
        long m = static_cast<long>(conv.size());
        if (ext.finite()) {
            last = m - 1;
            tail = 0;
            break;
        }
        last = m - 3;
        if (last >= 0) {
            tail = 2 * (Rational(Integer(1), conv[last + 1].q) +
                        Rational(Integer(1), conv[last + 2].q));
            if (tail <= target / 2) break;
        }
        if (m > 1000000)
            throw PrecisionFailure("error_sum_abs: term cap exceeded",
                                   Enclosure::point(Rational(0)));
        ext.ensure_terms(static_cast<std::size_t>(m) + 16);
    }

    const auto& conv = ext.convergents();
    // alpha precision: term widths scale with q_n, so pay for sum q_n
    long qdigits = last >= 0 ? decimal_length(conv[last].q) : 1;
    long alpha_digits = D + qdigits + 6;

    const int cap = max_doublings();
    std::optional<ErrorSumResult> best;
    for (int attempt = 0; attempt <= cap; ++attempt, alpha_digits *= 2) {
        Enclosure alpha = ext.value(Precision(alpha_digits));
        Enclosure sum = Enclosure::point(Rational(0));
        for (long n = 0; n <= last; ++n)
            sum = sum + abs(alpha * Rational(conv[n].q) - Rational(conv[n].p));
        Enclosure value(sum.lo, sum.hi + tail);

        ErrorSumResult res{value, last + 1, tail};
        if (!best || value.width() < best->value.width()) best = res;
        if (value.width() <= target) return res;
    }
    throw PrecisionFailure("error_sum_abs: escalation cap exceeded", best->value);
}

Enclosure error_sum_power_series(const ConstExpr& expr, const Rational& x, Precision prec) {
    Rational ax = abs_q(x);
    if (ax > Rational(3, 2))
        throw DomainError("error_sum_power_series: |x| must be <= 3/2");
    const long D = prec.digits;
    const Rational target = prec.target_width();
    CfExtractor ext(expr);

    if (x == 0) {
        // only the n = 0 term survives: alpha - a0
        ext.ensure_terms(1);
        Enclosure alpha = ext.value(Precision(D + 1));
        return alpha - Rational(ext.quotients().front());
    }

    // tail after N: sum_{j>=1} |x|^(N+j) / q_{N+j+1}
    //   <= (|x|^(N+1) / q_{N+2}) * (8/5) / (1 - 5|x|/8)
    const Rational rho = 5 * ax / 8;
    const Rational tail_coeff = Rational(8, 5) / (1 - rho);
    auto tail_bound = [&](const std::vector<Convergent>& conv, long last) {
        Rational xpow(1);
        for (long i = 0; i <= last; ++i) xpow *= ax;
        return Rational(xpow * tail_coeff / conv[last + 2].q);
    };

    std::size_t want = 16;
    Rational tail(0);
    long last = -1;
    for (;;) {
        ext.ensure_terms(want);
        const auto& conv = ext.convergents();
        long m = static_cast<long>(conv.size());
        if (ext.finite()) {
            last = m - 1;
            tail = 0;
            break;
        }
        last = m - 3;
        if (last >= 0) {
            tail = tail_bound(conv, last);
            if (tail <= target / 4) break;
        }
        if (want > 100000)
            throw PrecisionFailure("error_sum_power_series: term cap exceeded",
                                   Enclosure::point(Rational(0)));
        want *= 2;
    }

    const auto& conv = ext.convergents();
    // amplification of alpha's width through the retained terms
    Rational amp(0), xpow(1);
    for (long n = 0; n <= last; ++n) {
        amp += conv[n].q * xpow;
        xpow *= ax;
    }
    long amp_digits = decimal_length(floor_q(amp) + 1);

    const int cap = max_doublings();
    long alpha_digits = D + amp_digits + 6;
    std::optional<Enclosure> best;
    for (int attempt = 0; attempt <= cap; ++attempt, alpha_digits *= 2) {
        Enclosure alpha = ext.value(Precision(alpha_digits));
        Enclosure sum = Enclosure::point(Rational(0));
        Rational xp(1);
        for (long n = 0; n <= last; ++n) {
            sum = sum + (alpha * Rational(conv[n].q) - Rational(conv[n].p)) * xp;
            xp *= x;
        }
        Enclosure value(sum.lo - tail, sum.hi + tail);
        if (!best || value.width() < best->width()) best = value;
        if (value.width() <= target) return value;
    }
    throw PrecisionFailure("error_sum_power_series: escalation cap exceeded", *best);
}

// ---------------------------------------------------------------------------
// Komatsu residuals by exact Beta-function series

namespace {

// J(m, w) = int_0^1 x^m (x-1)^w e^(x/c) dx
//         = (-1)^w sum_k (m+k)! w! / ((m+k+w+1)! c^k k!)
Enclosure beta_exp_integral(long m, long w, const Rational& c, Precision prec) {
    auto term = [&](long k) {
        Integer num_fact, w_fact, den_fact, k_fact;
        mpz_fac_ui(num_fact.get_mpz_t(), static_cast<unsigned long>(m + k));
        mpz_fac_ui(w_fact.get_mpz_t(), static_cast<unsigned long>(w));
        mpz_fac_ui(den_fact.get_mpz_t(), static_cast<unsigned long>(m + k + w + 1));
        mpz_fac_ui(k_fact.get_mpz_t(), static_cast<unsigned long>(k));
        Integer ck_num, ck_den;
        mpz_pow_ui(ck_num.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(ck_den.get_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(k));
        Integer num = num_fact * w_fact * ck_den;
        Integer den = den_fact * k_fact * ck_num;
        Rational t(num, den);
        t.canonicalize();
        return t;
    };
    auto ratio = [&](long k) {
        // exact term ratio (m+k+1) / ((m+k+w+2) c (k+1)), decreasing in k
        Rational r = Rational(m + k + 1) / (Rational(m + k + w + 2) * c * (k + 1));
        r.canonicalize();
        return r;
    };
    Enclosure magnitude = sum_positive(term, ratio, prec);
    return (w % 2 == 0) ? magnitude : -magnitude;
}

}  // namespace

Enclosure komatsu_residual(const HurwitzFamily& family, long n, int j, Precision prec) {
    if (n < 0) throw DomainError("komatsu_residual: n must be >= 0");
    if (j < 0 || j > 2) throw DomainError("komatsu_residual: j must be 0, 1 or 2");
    Precision inner(prec.digits + 8);
    Integer s(family.s);
    if (family.tag == HurwitzFamily::Tag::F1) {
        if (family.ell < 2 || family.s < 1)
            throw DomainError("komatsu_residual: invalid F1 parameters");
        Rational c(Integer(family.ell) * s);
        Integer n_fact, cpow;
        mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(cpow.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(n + 1));
        Integer pden = cpow * n_fact;
        Rational pre(Integer(1), pden);
        pre.canonicalize();
        switch (j) {
            case 0:
                return beta_exp_integral(n, n, c, inner) * Rational(-(pre * s));
            case 1:
                return (beta_exp_integral(n + 1, n, c, inner) +
                        beta_exp_integral(n, n, c, inner) * Rational(s - 1)) * pre;
            default:
                return beta_exp_integral(n, n + 1, c, inner) * pre;
        }
    }
    if (family.s < 1) throw DomainError("komatsu_residual: invalid F2 parameters");
    Rational c(s);
    Integer n_fact, n1_fact, spow1, spow2;
    mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(n1_fact.get_mpz_t(), static_cast<unsigned long>(n + 1));
    mpz_pow_ui(spow1.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(n + 1));
    mpz_pow_ui(spow2.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(n + 2));
    switch (j) {
        case 0: {
            Integer pden = spow1 * n_fact;
            Rational pre(Integer(1), pden);
            pre.canonicalize();
            return beta_exp_integral(n, n + 1, c, inner) * pre;
        }
        case 1: {
            Integer pden = spow1 * n1_fact;
            Rational pre(Integer(1), pden);
            pre.canonicalize();
            return beta_exp_integral(n + 1, n + 1, c, inner) * Rational(-pre);
        }
        default: {
            Integer pden = spow2 * n1_fact;
            Rational pre(Integer(1), pden);
            pre.canonicalize();
            return (beta_exp_integral(n + 2, n + 1, c, inner) +
                    beta_exp_integral(n + 1, n + 1, c, inner) * Rational(s - 1)) * pre;
        }
    }
}

Enclosure a_series(const Rational& ell, const Rational& s, Precision prec) {
    if (ell <= 0 || s <= 0) throw DomainError("a_series: l and s must be positive");
    Rational c = ell * s;
    long n0 = mpz_get_si(ceil_q(Rational(1 / c)).get_mpz_t());
    auto term = [&c](long n) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n + 1));
        Integer cn_num, cn_den;
        mpz_pow_ui(cn_num.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(cn_den.get_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(n));
        Integer poly = Integer(2) * n * n + 7 * n + 3;
        Integer den = fact * poly * cn_num;
        Rational t(cn_den, den);
        t.canonicalize();
        return (n % 2 == 0) ? t : Rational(-t);
    };
    return sum_alternating(term, n0, prec);
}

Enclosure a_closed(const Rational& ell, const Rational& s, Precision prec) {
    if (ell <= 0 || s <= 0) throw DomainError("a_closed: l and s must be positive");
    Rational c = ell * s;
    return refine_to(prec, [&](Precision w) {
        Enclosure em = exp_enclosure(Rational(-1 / c), w);
        Enclosure integ = gauss_integral(c, w);
        Rational coeff = c * (2 - c - c * c) / 5;
        // polynomial part: -c/2 + c^3/5 (equals -3c/10 only at c = 1)
        Rational poly = c * c * c / 5 - c / 2;
        return em * coeff + integ * Rational(4, 5) + poly;
    });
}

ConstExpr hurwitz_value_expr(const HurwitzFamily& family) {
    Rational inv;
    if (family.tag == HurwitzFamily::Tag::F1) {
        if (family.ell < 2 || family.s < 1)
            throw DomainError("hurwitz_value_expr: invalid F1 parameters");
        Integer den = Integer(family.ell) * family.s;
        inv = Rational(Integer(1), den);
    } else {
        if (family.s < 1) throw DomainError("hurwitz_value_expr: invalid F2 parameters");
        inv = Rational(1, family.s);
    }
    inv.canonicalize();
    return mul(lit(Rational(family.s)), exp_of(lit(inv)));
}

}  // namespace errsum
