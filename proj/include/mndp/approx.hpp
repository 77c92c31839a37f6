#pragma once

#include <string>

#include "mndp/caps.hpp"
#include "mndp/instance.hpp"

namespace mndp {

// Result of a (1 - eps)-approximation: the achieved value with a verified
// routing, plus audit fields — the structural parameter that drove the
// scheme, the exact-search threshold, and which candidate won.
struct ApproxResult {
    int value = 0;
    Routing routing;
    double epsilon = 0.0;
    int param = 0;
    int ell_star = 0;
    std::string branch;
};

// Each scheme plays a bounded color-coding search (exact whenever the
// optimum is at most ell_star = ceil(param / eps)) against a fallback that
// loses at most `param` routed demands, and keeps the better routing.

// Fallback: optimal routing inside the cliques left by a minimum cluster
// deletion set.
ApproxResult approx_cvd(const Instance& inst, double eps, const Caps& caps = default_caps());

// Fallback: exact per-component solves after removing a minimum vertex
// integrity deletion set.
ApproxResult approx_vi(const Instance& inst, double eps, const Caps& caps = default_caps());

// Recursion along an elimination forest: per connected subgraph, a bounded
// search at tau = 2^height * ell_star races the sum of child solutions at
// eps/2 after the subtree root is removed.
ApproxResult approx_td(const Instance& inst, double eps, const Caps& caps = default_caps());

}  // namespace mndp
