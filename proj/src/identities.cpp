#include "errsumlab/identities.hpp"

#include <chrono>
#include <sstream>

#include "errsumlab/errorsum.hpp"
#include "errsumlab/functions.hpp"
#include "errsumlab/series.hpp"

#include <json.hpp>

namespace errsum {

namespace {

long param(const Params& p, const char* name) {
    auto it = p.find(name);
    if (it == p.end()) throw DomainError(std::string("missing parameter '") + name + "'");
    return it->second;
}

// sum_n (-1)^n / ((n+1)! (2n+1)), the erf-type helper series of the remarks
Enclosure remark_series(Precision prec) {
    auto term = [](long n) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n + 1));
        Integer den = fact * (2 * n + 1);
        Rational t(Integer(1), den);
        t.canonicalize();
        return (n % 2 == 0) ? t : Rational(-t);
    };
    return sum_alternating(term, 0, prec);
}

// sum_n 2^(2n+1) n! / (l^(n+1) (2n+1)!), exact term ratio 2/(l(2n+3))
Enclosure doubled_factorial_series(long ell, Precision prec) {
    auto term = [ell](long n) {
        Integer n_fact, odd_fact, p2, lp;
        mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));
        mpz_fac_ui(odd_fact.get_mpz_t(), static_cast<unsigned long>(2 * n + 1));
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(2 * n + 1));
        mpz_ui_pow_ui(lp.get_mpz_t(), static_cast<unsigned long>(ell),
                      static_cast<unsigned long>(n + 1));
        Integer num = p2 * n_fact;
        Integer den = lp * odd_fact;
        Rational t(num, den);
        t.canonicalize();
        return t;
    };
    auto ratio = [ell](long k) {
        Rational r(2, ell * (2 * k + 3));
        r.canonicalize();
        return r;
    };
    return sum_positive(term, ratio, prec);
}

ConstExpr exp_inv_expr(long ell) {
    Rational r(1, ell);
    r.canonicalize();
    return exp_of(lit(r));
}

ConstExpr metallic_expr(long m) {
    // (m + sqrt(4 + m^2)) / 2
    return div(add(lit(m), sqrt_of(lit(Rational(4 + Integer(m) * m)))), lit(2));
}

const char* kHetyeiText =
    "4*(11*sin(1/2)-6*cos(1/2))/(53*cos(1/2)-97*sin(1/2))";

// Value of the regular CF a0=4, a_{2k+1}=k+3, a_{2k+2}=4 as the hull of two
// consecutive convergents with 1/(q_N q_{N+1}) below target.
Enclosure hetyei_pattern_value(Precision prec) {
    const Rational target = prec.target_width();
    ConvergentAccumulator acc;
    Convergent prev = acc.push(Integer(4));
    for (long i = 1; i < 100000; ++i) {
        long k = (i - 1) / 2;
        Integer a = (i % 2 == 1) ? Integer(k + 3) : Integer(4);
        Convergent cur = acc.push(a);
        Integer qq = prev.q * cur.q;
        if (qq > 0 && Rational(Integer(1), qq) <= target) {
            Rational lo(prev.p, prev.q), hi(cur.p, cur.q);
            lo.canonicalize();
            hi.canonicalize();
            return Enclosure::hull(Enclosure::point(lo), Enclosure::point(hi));
        }
        prev = cur;
    }
    throw PrecisionFailure("hetyei pattern value: term cap", Enclosure::point(Rational(0)));
}

Enclosure conjecture_cf_value(Precision prec) {
    const Rational target = prec.target_width();
    Enclosure best = Enclosure::point(Rational(0));
    for (long n = 24; n <= 256; n *= 2) {
        best = eval_generalized_cf(erfint_numerator, erfint_denominator, n) + Rational(3, 8);
        if (best.width() <= target) return best;
    }
    throw PrecisionFailure("conjectured CF did not converge within 256 terms", best);
}

std::vector<long> range_grid(long lo, long hi) {
    std::vector<long> g;
    for (long v = lo; v <= hi; ++v) g.push_back(v);
    return g;
}

std::vector<Identity> build_registry() {
    std::vector<Identity> reg;
    using P = Precision;

    auto error_sum = [](const ConstExpr& e, P prec) {
        return error_sum_abs(e, prec).value;
    };

    // Eq. (1): E(e) = (e/4)(-1 + 10 A(1,1))
    reg.push_back(Identity{
        "eq1_main",
        "E(e) = (e/4)(-1 + 10 sum (-1)^n/((n+1)!(2n^2+7n+3)))",
        IdentityStatus::Proved,
        50,
        {},
        [error_sum](const Params&, P prec) { return error_sum(parse("e"), prec); },
        [](const Params&, P prec) {
            return refine_to(prec, [](P w) {
                Enclosure e = exp_enclosure(Rational(1), w);
                Enclosure a = a_series(Rational(1), Rational(1), w);
                return e * (a * Rational(10) + Rational(-1)) / Rational(4);
            });
        }});

    // Theorem 3, first family
    reg.push_back(Identity{
        "thm3_f1",
        "sum |p_n - s e^(1/(l s)) q_n| = (2/l) e^(1/(l s)) I(l s)",
        IdentityStatus::Proved,
        50,
        {{"l", 2, 64, {2, 3, 4}}, {"s", 1, 64, {1, 2, 3}}},
        [error_sum](const Params& p, P prec) {
            auto fam = HurwitzFamily::f1(param(p, "l"), param(p, "s"));
            return error_sum(hurwitz_value_expr(fam), prec);
        },
        [](const Params& p, P prec) {
            long l = param(p, "l"), s = param(p, "s");
            Rational c(Integer(l) * s);
            return refine_to(prec, [&](P w) {
                Rational inv(Integer(1), c.get_num());
                inv.canonicalize();
                return exp_enclosure(inv, w) * gauss_integral(c, w) * Rational(2, l);
            });
        }});

    // Theorem 3, second family
    reg.push_back(Identity{
        "thm3_f2",
        "sum |p*_n - s e^(1/s) q*_n| = 2 e^(1/s) I(s) + s(1 - e^(1/s)) - 1",
        IdentityStatus::Proved,
        50,
        {{"s", 1, 64, {1, 2, 3, 4}}},
        [error_sum](const Params& p, P prec) {
            auto fam = HurwitzFamily::f2(param(p, "s"));
            return error_sum(hurwitz_value_expr(fam), prec);
        },
        [](const Params& p, P prec) {
            long s = param(p, "s");
            return refine_to(prec, [&](P w) {
                Rational inv(1, s);
                inv.canonicalize();
                Enclosure es = exp_enclosure(inv, w);
                Enclosure integ = gauss_integral(Rational(s), w);
                return es * integ * Rational(2) +
                       (Enclosure::point(Rational(1)) - es) * Rational(s) +
                       Rational(-1);
            });
        }});

    // Corollary 4 for e itself
    reg.push_back(Identity{
        "cor4_e",
        "E(e) = 2 e int_0^1 e^(-t^2) dt - e",
        IdentityStatus::Proved,
        50,
        {},
        [error_sum](const Params&, P prec) { return error_sum(parse("e"), prec); },
        [](const Params&, P prec) {
            return refine_to(prec, [](P w) {
                Enclosure e = exp_enclosure(Rational(1), w);
                Enclosure integ = gauss_integral(Rational(1), w);
                return e * (integ * Rational(2) + Rational(-1));
            });
        }});

    // Corollary 4 for e^(1/l)
    reg.push_back(Identity{
        "cor4_epow",
        "E(e^(1/l)) = (2/l) e^(1/l) I(l)",
        IdentityStatus::Proved,
        50,
        {{"l", 2, 64, range_grid(2, 6)}},
        [error_sum](const Params& p, P prec) {
            return error_sum(exp_inv_expr(param(p, "l")), prec);
        },
        [](const Params& p, P prec) {
            long l = param(p, "l");
            return refine_to(prec, [&](P w) {
                Rational inv(1, l);
                inv.canonicalize();
                return exp_enclosure(inv, w) * gauss_integral(Rational(l), w) * Rational(2, l);
            });
        }});

    // Corollary 5: series vs closed form
    reg.push_back(Identity{
        "cor5_closed",
        "A(l,s) = -ls/2 + (ls)^3/5 + (1/5) ls (2 - ls - (ls)^2) e^(-1/ls) + (4/5) I(ls)",
        IdentityStatus::Proved,
        50,
        {{"l", 1, 64, {1, 2, 3}}, {"s", 1, 64, {1, 2, 3}}},
        [](const Params& p, P prec) {
            return a_series(Rational(param(p, "l")), Rational(param(p, "s")), prec);
        },
        [](const Params& p, P prec) {
            return a_closed(Rational(param(p, "l")), Rational(param(p, "s")), prec);
        }});

    // Remark helper series
    reg.push_back(Identity{
        "eq2_helper",
        "sum (-1)^(n+1)/((n+1)!(2n+1)) = 1 - e^(-1) - 2 int_0^1 e^(-t^2) dt",
        IdentityStatus::Proved,
        50,
        {},
        [](const Params&, P prec) { return -remark_series(prec); },
        [](const Params&, P prec) {
            return refine_to(prec, [](P w) {
                return Enclosure::point(Rational(1)) - exp_enclosure(Rational(-1), w) -
                       gauss_integral(Rational(1), w) * Rational(2);
            });
        }});

    // Eq. (2)
    reg.push_back(Identity{
        "eq2_easier",
        "E(e) = e sum (-1)^n/((n+1)!(2n+1)) - 1",
        IdentityStatus::Proved,
        50,
        {},
        [error_sum](const Params&, P prec) { return error_sum(parse("e"), prec); },
        [](const Params&, P prec) {
            return refine_to(prec, [](P w) {
                return exp_enclosure(Rational(1), w) * remark_series(w) + Rational(-1);
            });
        }});

    // Eq. (3)
    reg.push_back(Identity{
        "eq3_othere",
        "E(e) = sum 2^(2n+1) n!/(2n+1)! - e",
        IdentityStatus::Proved,
        50,
        {},
        [error_sum](const Params&, P prec) { return error_sum(parse("e"), prec); },
        [](const Params&, P prec) {
            return refine_to(prec, [](P w) {
                return doubled_factorial_series(1, w) - exp_enclosure(Rational(1), w);
            });
        }});

    // Eq. (4)
    reg.push_back(Identity{
        "eq4_otherpow",
        "E(e^(1/l)) = sum 2^(2n+1) n!/(l^(n+1) (2n+1)!)",
        IdentityStatus::Proved,
        50,
        {{"l", 2, 64, range_grid(2, 6)}},
        [error_sum](const Params& p, P prec) {
            return error_sum(exp_inv_expr(param(p, "l")), prec);
        },
        [](const Params& p, P prec) {
            return doubled_factorial_series(param(p, "l"), prec);
        }});

    // Elsner closed forms for quadratic numbers
    reg.push_back(Identity{
        "elsner_sqrt7",
        "E(sqrt(7)) = (7 + 5 sqrt(7))/14",
        IdentityStatus::Proved,
        50,
        {},
        [error_sum](const Params&, P prec) { return error_sum(parse("sqrt(7)"), prec); },
        [](const Params&, P prec) {
            return refine_to(prec, [](P w) {
                return (sqrt_enclosure(Rational(7), w) * Rational(5) + Rational(7)) /
                       Rational(14);
            });
        }});

    reg.push_back(Identity{
        "elsner_metallic",
        "E((m + sqrt(4+m^2))/2) = 1/((m + sqrt(4+m^2))/2 - 1)",
        IdentityStatus::Proved,
        50,
        {{"m", 1, 64, range_grid(1, 5)}},
        [error_sum](const Params& p, P prec) {
            return error_sum(metallic_expr(param(p, "m")), prec);
        },
        [](const Params& p, P prec) {
            long m = param(p, "m");
            return refine_to(prec, [&](P w) {
                Enclosure alpha =
                    (sqrt_enclosure(Rational(4 + Integer(m) * m), w) + Rational(m)) /
                    Rational(2);
                return reciprocal(alpha + Rational(-1));
            });
        }});

    reg.push_back(Identity{
        "elsner_golden",
        "E((1 + sqrt(5))/2) = (1 + sqrt(5))/2",
        IdentityStatus::Proved,
        50,
        {},
        [error_sum](const Params&, P prec) {
            return error_sum(parse("(1+sqrt(5))/2"), prec);
        },
        [](const Params&, P prec) {
            return refine_to(prec, [](P w) {
                return (sqrt_enclosure(Rational(5), w) + Rational(1)) / Rational(2);
            });
        }});

    // Hetyei's sin/cos constant against the assumed quotient pattern
    reg.push_back(Identity{
        "hetyei_cf",
        "4(11 sin(1/2) - 6 cos(1/2))/(53 cos(1/2) - 97 sin(1/2)) = [4;3,4,4,4,5,4,6,...]",
        IdentityStatus::Empirical,
        30,
        {},
        [](const Params&, P prec) { return eval_enclosure(parse(kHetyeiText), prec); },
        [](const Params&, P prec) { return hetyei_pattern_value(prec); }});

    // Conjectured generalized CF for int_0^1 e^(-t^2) dt
    reg.push_back(Identity{
        "conj_cf",
        "int_0^1 e^(-t^2) dt = 3/8 + 5/4/(3 + 9/(21 + 288/(63 + ...)))",
        IdentityStatus::Empirical,
        30,
        {},
        [](const Params&, P prec) { return conjecture_cf_value(prec); },
        [](const Params&, P prec) { return gauss_integral(Rational(1), prec); }});

    return reg;
}

}  // namespace

const std::vector<Identity>& registry() {
    static const std::vector<Identity> reg = build_registry();
    return reg;
}

const Identity* find_identity(const std::string& id) {
    for (const Identity& ident : registry())
        if (ident.id == id) return &ident;
    return nullptr;
}

void validate_params(const Identity& ident, const Params& params) {
    for (const auto& [key, value] : params) {
        const ParamSpec* spec = nullptr;
        for (const ParamSpec& ps : ident.params)
            if (ps.name == key) spec = &ps;
        if (!spec)
            throw DomainError("identity '" + ident.id + "' has no parameter '" + key + "'");
        if (value < spec->min || value > spec->max) {
            std::ostringstream os;
            os << "parameter " << key << "=" << value << " outside [" << spec->min << ", "
               << spec->max << "] for identity '" << ident.id << "'";
            throw DomainError(os.str());
        }
    }
    for (const ParamSpec& ps : ident.params)
        if (params.find(ps.name) == params.end())
            throw DomainError("identity '" + ident.id + "' needs parameter '" + ps.name + "'");
}

std::vector<Params> default_param_grid(const Identity& ident) {
    std::vector<Params> out{Params{}};
    for (const ParamSpec& ps : ident.params) {
        std::vector<Params> next;
        for (const Params& base : out) {
            for (long v : ps.default_grid) {
                Params p = base;
                p[ps.name] = v;
                next.push_back(std::move(p));
            }
        }
        out = std::move(next);
    }
    return out;
}

namespace {

long agreed_digits_of(const Enclosure& lhs, const Enclosure& rhs, long digits) {
    Enclosure hull = Enclosure::hull(lhs, rhs);
    return width_digits(hull.width(), 4 * digits);
}

}  // namespace

IdentityReport verify(const std::string& id, const Params& params, Precision prec) {
    const Identity* ident = find_identity(id);
    if (!ident) throw DomainError("unknown identity '" + id + "'");
    validate_params(*ident, params);

    IdentityReport rep;
    rep.id = id;
    rep.params = params;
    rep.requested_digits = prec.digits;
    rep.status = ident->status;

    auto t0 = std::chrono::steady_clock::now();
    try {
        // two guard digits so the hull of two touching sides still resolves
        // `digits` agreed digits
        Precision inner(prec.digits + 2);
        rep.lhs = ident->lhs(params, inner);
        rep.rhs = ident->rhs(params, inner);
        const Rational target = prec.target_width();
        rep.pass = rep.lhs.intersects(rep.rhs) && rep.lhs.width() <= target &&
                   rep.rhs.width() <= target;
        rep.agreed_digits = agreed_digits_of(rep.lhs, rep.rhs, prec.digits);
        if (!rep.pass) {
            if (!rep.lhs.intersects(rep.rhs))
                rep.diagnostic = "sides are disjoint";
            else
                rep.diagnostic = "side width exceeds target";
        }
    } catch (const PrecisionFailure& pf) {
        rep.pass = false;
        rep.diagnostic = std::string("precision failure: ") + pf.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

const char* status_name(IdentityStatus s) {
    return s == IdentityStatus::Proved ? "proved" : "empirical";
}

std::string report_to_json(const IdentityReport& report, bool include_elapsed) {
    nlohmann::ordered_json j;
    j["id"] = report.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["digits"] = report.requested_digits;
    long shown = report.requested_digits + 4;
    j["lhs"] = {decimal_truncated(report.lhs.lo, shown), decimal_truncated(report.lhs.hi, shown)};
    j["rhs"] = {decimal_truncated(report.rhs.lo, shown), decimal_truncated(report.rhs.hi, shown)};
    j["agreed_digits"] = report.agreed_digits;
    j["pass"] = report.pass;
    j["status"] = status_name(report.status);
    if (include_elapsed) j["elapsed_ms"] = report.elapsed_ms;
    if (!report.diagnostic.empty()) j["diagnostic"] = report.diagnostic;
    return j.dump();
}

}  // namespace errsum
