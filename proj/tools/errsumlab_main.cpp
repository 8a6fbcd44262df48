#include <atomic>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "errsumlab/contfrac.hpp"
#include "errsumlab/errorsum.hpp"
#include "errsumlab/functions.hpp"
#include "errsumlab/identities.hpp"

namespace {

using namespace errsum;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

struct Options {
    std::string expr_text;
    std::string identity;
    std::string preset = "erfint";
    std::vector<std::string> param_args;
    long digits = 30;
    long terms = 20;
    long jobs = 0;
    bool all = false;
    bool json = false;
};

void add_format_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", [&opt](const std::vector<std::string>& vals) {
            if (vals.back() == "json") { opt.json = true; return true; }
            if (vals.back() == "text") { opt.json = false; return true; }
            return false;
        }, "output format: text | json")->expected(1);
}

int run_expand(const Options& opt) {
    std::vector<Integer> qs = extract_cf(parse(opt.expr_text), opt.terms);
    if (opt.json) {
        ordered_json j;
        j["expr"] = opt.expr_text;
        ordered_json arr = ordered_json::array();
        for (const Integer& a : qs) arr.push_back(a.get_str());
        j["quotients"] = arr;
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < qs.size(); ++i)
            std::cout << (i ? " " : "") << qs[i].get_str();
        std::cout << "\n";
    }
    return kExitOk;
}

int run_convergents(const Options& opt) {
    CfExtractor ext(parse(opt.expr_text));
    ext.ensure_terms(static_cast<std::size_t>(opt.terms));
    auto conv = ext.convergents();
    if (conv.size() > static_cast<std::size_t>(opt.terms))
        conv.resize(static_cast<std::size_t>(opt.terms));
    if (opt.json) {
        ordered_json arr = ordered_json::array();
        for (const Convergent& c : conv)
            arr.push_back({{"n", c.index}, {"p", c.p.get_str()}, {"q", c.q.get_str()}});
        std::cout << arr.dump() << "\n";
    } else {
        for (const Convergent& c : conv)
            std::cout << c.index << " " << c.p.get_str() << " " << c.q.get_str() << "\n";
    }
    return kExitOk;
}

int run_errsum(const Options& opt) {
    ErrorSumResult res = error_sum_abs(parse(opt.expr_text), Precision(opt.digits));
    long agreed = width_digits(res.value.width(), opt.digits);
    std::string decimal = decimal_truncated(res.value.mid(), agreed);
    if (opt.json) {
        ordered_json j;
        j["expr"] = opt.expr_text;
        j["digits"] = opt.digits;
        j["value"] = decimal;
        j["agreed_digits"] = agreed;
        j["lo"] = decimal_truncated(res.value.lo, opt.digits + 4);
        j["hi"] = decimal_truncated(res.value.hi, opt.digits + 4);
        j["pm_width"] = decimal_truncated(res.value.width(), opt.digits + 4);
        j["terms_used"] = res.terms_used;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << decimal << "\n";
    }
    return kExitOk;
}

int run_gencf(const Options& opt) {
    if (opt.preset != "erfint") {
        std::cerr << "errsumlab: unknown gencf preset '" << opt.preset << "'\n";
        return kExitUsage;
    }
    Enclosure cf = eval_generalized_cf(erfint_numerator, erfint_denominator, opt.terms) +
                   Rational(3, 8);
    Enclosure oracle = gauss_integral(Rational(1), Precision(opt.digits));
    Enclosure hull = Enclosure::hull(cf, oracle);
    long agreed = width_digits(hull.width(), 4 * opt.digits);
    bool consistent = cf.intersects(oracle);
    if (opt.json) {
        ordered_json j;
        j["preset"] = opt.preset;
        j["terms"] = opt.terms;
        j["digits"] = opt.digits;
        j["cf_lo"] = decimal_truncated(cf.lo, opt.digits + 4);
        j["cf_hi"] = decimal_truncated(cf.hi, opt.digits + 4);
        j["integral_lo"] = decimal_truncated(oracle.lo, opt.digits + 4);
        j["integral_hi"] = decimal_truncated(oracle.hi, opt.digits + 4);
        j["agreed_digits"] = agreed;
        j["consistent"] = consistent;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "cf       = " << decimal_truncated(cf.mid(), agreed) << "\n"
                  << "integral = " << decimal_truncated(oracle.mid(), agreed) << "\n"
                  << "agreed_digits = " << agreed << ", consistent = "
                  << (consistent ? "yes" : "no") << "\n";
    }
    return consistent ? kExitOk : kExitMismatch;
}

// "k=v" or "k=a..b"
std::vector<std::pair<std::string, std::vector<long>>> parse_param_args(
    const std::vector<std::string>& args) {
    std::vector<std::pair<std::string, std::vector<long>>> out;
    for (const std::string& arg : args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0)
            throw DomainError("bad --param '" + arg + "', expected k=v or k=a..b");
        std::string key = arg.substr(0, eq);
        std::string val = arg.substr(eq + 1);
        std::vector<long> values;
        auto dots = val.find("..");
        try {
            if (dots == std::string::npos) {
                values.push_back(std::stol(val));
            } else {
                long lo = std::stol(val.substr(0, dots));
                long hi = std::stol(val.substr(dots + 2));
                if (hi < lo) throw DomainError("empty range in --param '" + arg + "'");
                for (long v = lo; v <= hi; ++v) values.push_back(v);
            }
        } catch (const std::invalid_argument&) {
            throw DomainError("bad --param '" + arg + "', values must be integers");
        }
        out.emplace_back(std::move(key), std::move(values));
    }
    return out;
}

struct VerifyTask {
    std::string id;
    Params params;
    long digits;
};

int run_verify(const Options& opt) {
    std::vector<VerifyTask> tasks;
    auto param_grids = parse_param_args(opt.param_args);

    if (opt.all) {
        if (!param_grids.empty())
            throw DomainError("--param cannot be combined with --all");
        for (const Identity& ident : registry()) {
            long digits = opt.digits > 0 ? opt.digits : ident.default_digits;
            for (const Params& p : default_param_grid(ident))
                tasks.push_back({ident.id, p, digits});
        }
    } else {
        const Identity* ident = find_identity(opt.identity);
        if (!ident) throw DomainError("unknown identity '" + opt.identity + "'");
        long digits = opt.digits > 0 ? opt.digits : ident->default_digits;
        // start from default grids, then replace any explicitly given axes
        std::vector<Params> grid{Params{}};
        for (const ParamSpec& ps : ident->params) {
            std::vector<long> values = ps.default_grid;
            for (const auto& [key, vals] : param_grids)
                if (key == ps.name) values = vals;
            std::vector<Params> next;
            for (const Params& base : grid)
                for (long v : values) {
                    Params p = base;
                    p[ps.name] = v;
                    next.push_back(std::move(p));
                }
            grid = std::move(next);
        }
        for (const auto& [key, vals] : param_grids) {
            bool known = false;
            for (const ParamSpec& ps : ident->params)
                if (ps.name == key) known = true;
            if (!known)
                throw DomainError("identity '" + ident->id + "' has no parameter '" + key + "'");
        }
        for (const Params& p : grid) tasks.push_back({ident->id, p, digits});
    }

    // dry-run validation so bad parameters exit with a usage error, not a report
    for (const VerifyTask& t : tasks) {
        const Identity* ident = find_identity(t.id);
        validate_params(*ident, t.params);
    }

    std::vector<IdentityReport> reports(tasks.size());
    unsigned jobs = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, tasks.size() == 0 ? 1 : tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            reports[i] = verify(tasks[i].id, tasks[i].params, Precision(tasks[i].digits));
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    bool all_pass = true;
    if (opt.json) {
        std::cout << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << report_to_json(reports[i], true);
            all_pass = all_pass && reports[i].pass;
        }
        std::cout << "]\n";
    } else {
        for (const IdentityReport& rep : reports) {
            std::cout << (rep.pass ? "PASS" : "FAIL") << "  " << rep.id;
            for (const auto& [k, v] : rep.params) std::cout << " " << k << "=" << v;
            std::cout << "  digits=" << rep.requested_digits
                      << " agreed=" << rep.agreed_digits << " status="
                      << status_name(rep.status);
            if (!rep.diagnostic.empty()) std::cout << "  (" << rep.diagnostic << ")";
            std::cout << "\n";
            all_pass = all_pass && rep.pass;
        }
    }
    return all_pass ? kExitOk : kExitMismatch;
}

int run_list(const Options& opt) {
    if (opt.json) {
        ordered_json arr = ordered_json::array();
        for (const Identity& ident : registry()) {
            ordered_json j;
            j["id"] = ident.id;
            j["status"] = status_name(ident.status);
            j["default_digits"] = ident.default_digits;
            ordered_json ps = ordered_json::array();
            for (const ParamSpec& p : ident.params)
                ps.push_back({{"name", p.name}, {"min", p.min}, {"max", p.max},
                              {"default_grid", p.default_grid}});
            j["params"] = ps;
            j["description"] = ident.description;
            arr.push_back(j);
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const Identity& ident : registry()) {
            std::cout << ident.id << "  [" << status_name(ident.status) << "]";
            for (const ParamSpec& p : ident.params) {
                std::cout << "  " << p.name << "=";
                for (std::size_t i = 0; i < p.default_grid.size(); ++i)
                    std::cout << (i ? "," : "") << p.default_grid[i];
            }
            std::cout << "  -- " << ident.description << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision continued fractions, error sums, and identity verification"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* expand = app.add_subcommand("expand", "partial quotients of an expression");
    expand->add_option("expr", opt.expr_text, "constant expression")->required();
    expand->add_option("--terms", opt.terms, "number of quotients")->check(CLI::PositiveNumber);
    add_format_flag(expand, opt);

    CLI::App* conv = app.add_subcommand("convergents", "convergents p_n/q_n of an expression");
    conv->add_option("expr", opt.expr_text, "constant expression")->required();
    conv->add_option("--terms", opt.terms, "number of convergents")->check(CLI::PositiveNumber);
    add_format_flag(conv, opt);

    CLI::App* errsum_cmd = app.add_subcommand("errsum", "error sum E(alpha) = sum |q_n alpha - p_n|");
    errsum_cmd->add_option("expr", opt.expr_text, "constant expression")->required();
    errsum_cmd->add_option("--digits", opt.digits, "target decimal digits")->check(CLI::PositiveNumber);
    add_format_flag(errsum_cmd, opt);

    CLI::App* gencf = app.add_subcommand("gencf", "generalized continued fraction presets");
    gencf->add_option("--preset", opt.preset, "preset name (erfint)");
    gencf->add_option("--terms", opt.terms, "truncation depth")->check(CLI::PositiveNumber);
    gencf->add_option("--digits", opt.digits, "oracle digits")->check(CLI::PositiveNumber);
    add_format_flag(gencf, opt);

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify identities from the registry");
    verify_cmd->add_option("id", opt.identity, "identity id");
    verify_cmd->add_flag("--all", opt.all, "verify the whole registry on default grids");
    verify_cmd->add_option("--param", opt.param_args, "parameter k=v or k=a..b (repeatable)");
    opt.digits = 0;  // verify defaults to the per-identity digit budget
    verify_cmd->add_option("--digits", opt.digits, "target decimal digits");
    verify_cmd->add_option("--jobs", opt.jobs, "parallel workers (default: hardware)");
    add_format_flag(verify_cmd, opt);

    CLI::App* list_cmd = app.add_subcommand("list", "list registry identities");
    add_format_flag(list_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "errsumlab: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (expand->parsed()) return run_expand(opt);
        if (conv->parsed()) return run_convergents(opt);
        if (errsum_cmd->parsed()) {
            if (opt.digits <= 0) opt.digits = 30;
            return run_errsum(opt);
        }
        if (gencf->parsed()) {
            if (opt.digits <= 0) opt.digits = 30;
            return run_gencf(opt);
        }
        if (verify_cmd->parsed()) {
            if (!opt.all && opt.identity.empty()) {
                std::cerr << "errsumlab: verify needs an identity id or --all\n";
                return kExitUsage;
            }
            return run_verify(opt);
        }
        if (list_cmd->parsed()) return run_list(opt);
    } catch (const ParseError& e) {
        std::cerr << "errsumlab: syntax error at offset " << e.offset() << ": " << e.what();
        if (std::string(e.what()).find(e.expected()) == std::string::npos)
            std::cerr << " (expected " << e.expected() << ")";
        std::cerr << "\n";
        return kExitUsage;
    } catch (const PrecisionFailure& e) {
        std::cerr << "errsumlab: precision failure: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const DomainError& e) {
        std::cerr << "errsumlab: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
