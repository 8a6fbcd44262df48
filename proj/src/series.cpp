#include "errsumlab/series.hpp"

#include <cstdlib>
#include <optional>

namespace errsum {

Enclosure sum_alternating(const TermFn& term, long n0, Precision prec, long max_terms) {
    const Rational target = prec.target_width();
    Rational sum(0);
    std::optional<Enclosure> best;
    for (long n = 0; n < max_terms; ++n) {
        Rational t = term(n);
        if (n > n0) {
            // from here the Leibniz bracket applies: limit in hull(S, S + t)
            Enclosure bracket = Enclosure::hull(Enclosure::point(sum),
                                                Enclosure::point(sum + t));
            if (!best || bracket.width() < best->width()) best = bracket;
            if (abs_q(t) <= target) return bracket;
            if (t == 0) return Enclosure::point(sum);
        } else if (t == 0 && n >= n0) {
            // terms vanished before the bracket kicked in (e.g. zero series)
            return Enclosure::point(sum);
        }
        sum += t;
    }
    throw PrecisionFailure("sum_alternating: iteration cap exceeded",
                           best.value_or(Enclosure::point(sum)));
}

Enclosure sum_positive(const TermFn& term, const TermFn& ratio_bound, Precision prec,
                       long max_terms) {
    const Rational target = prec.target_width();
    Rational sum(0);
    std::optional<Enclosure> best;
    for (long k = 0; k < max_terms; ++k) {
        Rational t = term(k);
        if (t < 0) throw DomainError("sum_positive: negative term");
        sum += t;
        Rational r = ratio_bound(k);
        if (r >= 0 && r < 1) {
            Rational tail = t * r / (1 - r);
            Enclosure e(sum, sum + tail);
            if (!best || e.width() < best->width()) best = e;
            if (tail <= target) return e;
        }
        if (t == 0 && r >= 0 && r < 1) return Enclosure::point(sum);
    }
    throw PrecisionFailure("sum_positive: iteration cap exceeded",
                           best.value_or(Enclosure::point(sum)));
}

int max_doublings() {
    if (const char* env = std::getenv("ERRSUMLAB_MAX_DOUBLINGS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0 && v <= 64) return static_cast<int>(v);
    }
    return 6;
}

Enclosure refine_to(Precision prec, const std::function<Enclosure(Precision)>& f,
                    long guard_digits) {
    const Rational target = prec.target_width();
    const int cap = max_doublings();
    long d = prec.digits + guard_digits;
    std::optional<Enclosure> best;
    for (int attempt = 0; attempt <= cap; ++attempt, d *= 2) {
        Enclosure e = f(Precision(d));
        if (!best || e.width() < best->width()) best = e;
        if (e.width() <= target) return e;
    }
    throw PrecisionFailure("refine_to: escalation cap exceeded", *best);
}

}  // namespace errsum
