#pragma once

#include <cstdint>
#include <optional>

#include "mndp/caps.hpp"
#include "mndp/instance.hpp"

namespace mndp {

// Exhaustive ground truth for the maximum number of routable demands.
// Iterates demand subsets by decreasing size; for each subset backtracks
// over vertex-disjoint path assignments. `opt` is empty when the node
// budget ran out before the value was settled.
struct OracleResult {
    std::optional<int> opt;
    Routing routing;              // witness when opt is known and > 0
    std::int64_t expansions = 0;  // search nodes spent
};
OracleResult brute_force_opt(const Instance& inst, std::int64_t budget = -1);

// Maximum cardinality matching on a general graph (blossom shrinking).
// Returns the mate array (size n+1, 0 = unmatched) and the matching size.
struct MatchingResult {
    int size = 0;
    std::vector<int> mate;
};
MatchingResult max_matching(const Graph& g);

// Exact OPT when G - S is a disjoint union of cliques: one auxiliary edge
// per demand with both endpoints in the same clique, then maximum matching.
// Throws input_error naming a witness component if G - S is not a cluster
// graph (or if a demand has equal endpoints).
struct ClusterRouteResult {
    int value = 0;
    Routing routing;
};
ClusterRouteResult cluster_route_opt(const Instance& inst, const std::vector<int>& deleted);

}  // namespace mndp
