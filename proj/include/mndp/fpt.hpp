#pragma once

#include <cstdint>
#include <vector>

#include "mndp/caps.hpp"
#include "mndp/instance.hpp"

namespace mndp {

// Closed-form color counts sufficient for a colorful optimal partial
// routing of ell demands under each structural parameter.
enum class ParamKind { Vc, Cvd, Vi, Td };
long long tau_bound(ParamKind kind, int param, int ell);

// One reduction event. The rules:
//   1: a self-demand (u,u) is routed by the single-vertex path and banked;
//      u disappears, other demands stranded on u are dropped
//   2: an isolated vertex is removed; demands stranded on it are dropped
//   3: a degree-one vertex u folds onto its neighbor v; demand endpoints
//      at u move to v (recorded per endpoint slot for later replay)
struct ReductionStep {
    struct Rewrite {
        int demand = 0;
        int slot = 0;  // 0 = first endpoint, 1 = second
        int from = 0, to = 0;
    };
    int rule = 0;
    int vertex = 0;
    int neighbor = 0;        // rule 3 only
    int banked_demand = -1;  // rule 1 only
    std::vector<int> dropped;
    std::vector<Rewrite> rewrites;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

// Exhaustive application of the three rules, then compaction to a fresh
// instance. The optimum of the original equals the optimum of the reduced
// instance plus `credit`.
struct ReductionResult {
    Instance reduced;
    std::vector<int> vertex_map;  // reduced vertex -> original vertex
    std::vector<int> demand_map;  // reduced demand -> original demand
    int credit = 0;               // demands the rules routed on their own
    ReductionTrace trace;
};
ReductionResult apply_rules(const Instance& inst);

// Lifts a routing of `red.reduced` back to `original`: re-adds the banked
// single-vertex routes and undoes every endpoint fold in reverse order.
Routing expand_routing(const Instance& original, const ReductionResult& red,
                       const Routing& reduced_routing);

// Exact solver driven by the feedback edge number: reduce, split into
// components, branch three ways on edges at a degree->=3 vertex (a path
// through a vertex leaves one of any three incident edges unused), and
// enumerate demand/arc choices once a component is a bare cycle.
struct FesSolveResult {
    int opt = 0;
    Routing routing;
    std::int64_t nodes = 0;  // branch states explored
};
FesSolveResult solve_fes(const Instance& inst, const Caps& caps = default_caps());

}  // namespace mndp
