#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mndp/caps.hpp"
#include "mndp/graph.hpp"

namespace mndp {

// Result of an exact parameter search. `value` is empty when the graph
// exceeds the size cap for that parameter or the search budget ran out;
// `exact` is false in that case. `witness` is the deletion set achieving
// the value (empty for parameters without one, and when unknown).
struct ParamResult {
    std::optional<int> value;
    std::vector<int> witness;
    bool exact = true;
};

// Minimum vertex cover via max-degree branching (take v or all neighbors).
ParamResult vertex_cover_number(const Graph& g, const Caps& caps = default_caps());

// Minimum deletion set leaving a disjoint union of cliques, via 3-way
// branching on induced paths a-b-c.
ParamResult cluster_deletion_number(const Graph& g, const Caps& caps = default_caps());

// Vertex integrity: min over S of |S| + (largest component of G - S).
// Iterative deepening on the answer; every connected set of size
// t - |S| + 1 inside an oversized component must lose a vertex.
ParamResult vertex_integrity(const Graph& g, const Caps& caps = default_caps());

// Minimum feedback vertex set by subset search over the 2-core.
ParamResult feedback_vertex_number(const Graph& g, const Caps& caps = default_caps());

// Feedback edge number m - n + #components, with the non-tree edges of a
// spanning forest as witness. Always exact.
struct FesResult {
    int value = 0;
    std::vector<std::pair<int, int>> edges;
};
FesResult feedback_edge_number(const Graph& g);

// Elimination forest: parent[v] = 0 for roots, and every edge of the graph
// connects an ancestor-descendant pair. `depth` counts vertices on the
// longest root-to-leaf chain. `exact` is false when the forest comes from
// the DFS fallback rather than the minimum-depth search.
struct EliminationForest {
    std::vector<int> parent;  // 1-based, size n + 1
    std::vector<int> roots;
    int depth = 0;
    bool exact = true;
};
EliminationForest treedepth(const Graph& g, const Caps& caps = default_caps());

bool valid_elimination_forest(const Graph& g, const EliminationForest& f);

// Everything at once, for reporting.
struct ParamReport {
    ParamResult vc, cvd, vi, fvs;
    FesResult fes;
    EliminationForest td;
};
ParamReport compute_params(const Graph& g, const Caps& caps = default_caps());

}  // namespace mndp
