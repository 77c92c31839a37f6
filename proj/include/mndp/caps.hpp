#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mndp {

// Input that violates a format or type precondition (bad file syntax,
// out-of-range vertex id, ...). Carries a message naming the offense.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded; the result is "unknown", not wrong.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hard ceilings for the exponential parts. Everything here is a guard
// against runaway work, not a tuning knob for correctness.
struct Caps {
    int tau_cap = 25;                      // max colors accepted by the subset DP
    std::int64_t oracle_budget = 20'000'000;   // brute-force node expansions
    std::int64_t sweep_budget = 60'000'000;    // colorings * 2^tau per solve
    std::int64_t family_cap = 5'000'000;       // coloring family size
    int exact_param_n = 24;                // vertex-cover style branching
    int vi_exact_n = 24;
    int td_exact_n = 17;                   // memoized treedepth recursion
    int fvs_exact_n = 20;
    int cvd_exact_n = 24;
};

// Process-wide caps: defaults overridden by the MNDP_CAPS environment
// variable, a comma list like "tau=30,oracle=5000000,exact_n=20".
// Keys: tau, oracle, sweep, family, exact_n, vi_n, td_n, fvs_n, cvd_n.
const Caps& default_caps();

// Parses an override list into `base`. Throws input_error on bad syntax.
Caps parse_caps(const std::string& spec, Caps base = Caps{});

}  // namespace mndp
