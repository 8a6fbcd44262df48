#include "errsumlab/contfrac.hpp"

#include "errsumlab/series.hpp"

namespace errsum {

HurwitzFamily HurwitzFamily::f1(long ell, long s) {
    if (ell < 2 || s < 1) throw DomainError("HurwitzFamily F1 requires l >= 2, s >= 1");
    return HurwitzFamily{Tag::F1, ell, s};
}

HurwitzFamily HurwitzFamily::f2(long s) {
    if (s < 1) throw DomainError("HurwitzFamily F2 requires s >= 1");
    return HurwitzFamily{Tag::F2, 0, s};
}

namespace {

class HurwitzQuotients final : public QuotientStream {
public:
    explicit HurwitzQuotients(HurwitzFamily f) : f_(f) {}

    std::optional<Integer> next() override {
        if (pos_ == 0) {
            ++pos_;
            return Integer(f_.tag == HurwitzFamily::Tag::F1 ? f_.s : f_.s + 1);
        }
        long phase = (pos_ - 1) % 3;
        long k = (pos_ - 1) / 3 + 1;
        ++pos_;
        if (f_.tag == HurwitzFamily::Tag::F1) {
            // (2k-1)l - 1, 1, 2s-1
            switch (phase) {
                case 0: return Integer((2 * k - 1) * f_.ell - 1);
                case 1: return Integer(1);
                default: return Integer(2 * f_.s - 1);
            }
        }
        // F2: 2s-1, 2k, 1
        switch (phase) {
            case 0: return Integer(2 * f_.s - 1);
            case 1: return Integer(2 * k);
            default: return Integer(1);
        }
    }

private:
    HurwitzFamily f_;
    long pos_ = 0;
};

}  // namespace

std::unique_ptr<QuotientStream> hurwitz_stream(const HurwitzFamily& family) {
    if (family.tag == HurwitzFamily::Tag::F1 && (family.ell < 2 || family.s < 1))
        throw DomainError("hurwitz_stream: F1 requires l >= 2, s >= 1");
    if (family.tag == HurwitzFamily::Tag::F2 && family.s < 1)
        throw DomainError("hurwitz_stream: F2 requires s >= 1");
    return std::make_unique<HurwitzQuotients>(family);
}

Convergent ConvergentAccumulator::push(const Integer& a) {
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    ++n;
    return Convergent{n, p, q};
}

std::vector<Convergent> convergents_from_quotients(QuotientStream& quotients, long count) {
    std::vector<Convergent> out;
    ConvergentAccumulator acc;
    for (long i = 0; i < count; ++i) {
        auto a = quotients.next();
        if (!a) break;
        out.push_back(acc.push(*a));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Digit extraction

CfExtractor::CfExtractor(ConstExpr expr) : expr_(std::move(expr)) {}

Enclosure CfExtractor::value(Precision prec) const { return eval_enclosure(expr_, prec); }

void CfExtractor::extract_pass(long digits) {
    Enclosure x = eval_enclosure(expr_, Precision(digits));
    if (x.hi <= 0) throw DomainError("extract_cf: value must be positive");
    std::vector<Integer> qs;
    if (x.is_point()) {
        // exact rational: Euclid, canonical by construction
        Rational v = x.lo;
        for (;;) {
            Integer a = floor_q(v);
            qs.push_back(a);
            v -= a;
            if (v == 0) break;
            v = 1 / v;
        }
        finite_ = true;
    } else {
        if (x.lo <= 0) { quotients_.clear(); return; }  // needs more precision
        for (;;) {
            Integer alo = floor_q(x.lo);
            if (alo != floor_q(x.hi)) break;
            if (!qs.empty() && alo < 1) break;
            qs.push_back(alo);
            Enclosure frac = x - Rational(alo);
            if (frac.lo <= 0) break;  // possible termination; undecidable here
            x = reciprocal(frac);
        }
    }
    quotients_ = std::move(qs);
    ConvergentAccumulator acc;
    convergents_.clear();
    convergents_.reserve(quotients_.size());
    for (const Integer& a : quotients_) convergents_.push_back(acc.push(a));
}

void CfExtractor::grow(std::size_t target_terms, const Integer* q_bound) {
    const int kMaxDoublings = 20;
    for (int i = 0; i <= kMaxDoublings; ++i) {
        bool terms_ok = quotients_.size() >= target_terms;
        bool bound_ok = q_bound == nullptr ||
                        (!convergents_.empty() && convergents_.back().q >= *q_bound);
        if (finite_ || (terms_ok && bound_ok)) return;
        extract_pass(digits_);
        digits_ *= 2;
    }
    throw PrecisionFailure("extract_cf: doubling cap exceeded",
                           Enclosure::point(Rational(0)));
}

void CfExtractor::ensure_terms(std::size_t n) { grow(n, nullptr); }

void CfExtractor::ensure_tail_denominator(const Integer& bound) { grow(0, &bound); }

std::vector<Integer> extract_cf(const ConstExpr& expr, long count) {
    if (count < 1) throw DomainError("extract_cf: count must be >= 1");
    CfExtractor ext(expr);
    ext.ensure_terms(static_cast<std::size_t>(count));
    std::vector<Integer> out = ext.quotients();
    if (out.size() > static_cast<std::size_t>(count)) out.resize(count);
    return out;
}

// ---------------------------------------------------------------------------
// Generalized continued fractions

namespace {

Rational gcf_truncation(const std::function<Rational(long)>& numerator,
                        const std::function<Rational(long)>& denominator, long m) {
    Rational t(0);
    for (long i = m; i >= 1; --i) {
        Rational a = numerator(i), b = denominator(i);
        if (a <= 0 || b <= 0)
            throw DomainError("eval_generalized_cf: elements must be positive");
        t = a / (b + t);
    }
    return t;
}

}  // namespace

Enclosure eval_generalized_cf(const std::function<Rational(long)>& numerator,
                              const std::function<Rational(long)>& denominator,
                              long terms) {
    if (terms < 1) throw DomainError("eval_generalized_cf: terms must be >= 1");
    Rational kn = gcf_truncation(numerator, denominator, terms);
    Rational kn1 = gcf_truncation(numerator, denominator, terms + 1);
    return Enclosure::hull(Enclosure::point(kn), Enclosure::point(kn1));
}

Enclosure eval_generalized_cf_finite(const std::vector<Rational>& numerators,
                                     const std::vector<Rational>& denominators) {
    if (numerators.empty() || numerators.size() != denominators.size())
        throw DomainError("eval_generalized_cf_finite: element lists must match and be nonempty");
    Rational v = gcf_truncation([&](long i) { return numerators[i - 1]; },
                                [&](long i) { return denominators[i - 1]; },
                                static_cast<long>(numerators.size()));
    return Enclosure::point(v);
}

Rational erfint_numerator(long index) {
    if (index < 1) throw DomainError("erfint_numerator: index must be >= 1");
    if (index == 1) return Rational(5, 4);
    long n = index - 1;
    return Rational(Integer(n) * (n + 2) * (n + 2) * (2 * n - 1) * (2 * n - 1));
}

Rational erfint_denominator(long index) {
    if (index < 1) throw DomainError("erfint_denominator: index must be >= 1");
    if (index == 1) return Rational(3);
    long n = index - 1;
    return Rational(Integer(2 * n + 5) * (Integer(n) * n + n + 1));
}

}  // namespace errsum
