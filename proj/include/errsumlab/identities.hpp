#ifndef ERRSUMLAB_IDENTITIES_HPP
#define ERRSUMLAB_IDENTITIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "errsumlab/enclosure.hpp"

namespace errsum {

enum class IdentityStatus { Proved, Empirical };

using Params = std::map<std::string, long>;

struct ParamSpec {
    std::string name;
    long min;
    long max;                      // inclusive; generous upper sanity bound
    std::vector<long> default_grid;
};

// One verifiable identity: two independently evaluated sides. Error-sum
// sides go through the continued-fraction machinery; closed-form sides go
// through the series/enclosure core only, so agreement is never tautological.
struct Identity {
    std::string id;
    std::string description;
    IdentityStatus status;
    long default_digits;
    std::vector<ParamSpec> params;
    std::function<Enclosure(const Params&, Precision)> lhs;
    std::function<Enclosure(const Params&, Precision)> rhs;
};

struct IdentityReport {
    std::string id;
    Params params;
    long requested_digits = 0;
    Enclosure lhs, rhs;
    long agreed_digits = 0;
    bool pass = false;
    IdentityStatus status = IdentityStatus::Proved;
    double elapsed_ms = 0.0;
    std::string diagnostic;  // set when evaluation failed short of target
};

const std::vector<Identity>& registry();

const Identity* find_identity(const std::string& id);

// Validates parameters against the spec (throws DomainError on unknown or
// out-of-range values, fills absent ones only if the grid has a single value).
void validate_params(const Identity& ident, const Params& params);

// Evaluates both sides to width <= 10^(-digits). Precision failures are
// reported as pass = false with a diagnostic, not an exception.
IdentityReport verify(const std::string& id, const Params& params, Precision prec);

// Cartesian expansion of an identity's default parameter grids.
std::vector<Params> default_param_grid(const Identity& ident);

// JSON object per the CLI schema: id, params, digits, lhs, rhs, agreed_digits,
// pass, status, elapsed_ms.
std::string report_to_json(const IdentityReport& report, bool include_elapsed);

const char* status_name(IdentityStatus s);

}  // namespace errsum

#endif
