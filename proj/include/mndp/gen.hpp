#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mndp/instance.hpp"
#include "mndp/io.hpp"

namespace mndp {

// What a generated demand encodes: a choice-gadget pair (the M_c / alpha-beta
// demands), an adjacency demand (one per source edge), a copy demand, or a
// validation demand.
enum class DemandKind { Choice, Adjacency, Copy, Validation };

// Adjacency vertex of gen_pih: joins classes i < j using w-slot `slot_i`
// in gadget i and `slot_j` in gadget j.
struct AdjacencyInfo {
    int vertex = 0;
    int i = 0, j = 0;
    int slot_i = 0, slot_j = 0;
};

// Choice-gadget instance of gen_td: encodes class `cls`; its vertices start
// at id `first` (3n path vertices, then alpha/beta pairs for j = 2..n).
struct InstanceInfo {
    int cls = 0;
    int first = 0;
};

// Copy vertex of gen_td: joins slot t+1 of instance `from` to slot 1 of
// instance `to` (0-based ordinals into GadgetIndex::instances).
struct CopyInfo {
    int vertex = 0;
    int from = 0, to = 0;
    int t = 0;
};

// Validation vertex of gen_td: joins the v_2 slots of instances `row`/`col`.
struct ValidationInfo {
    int vertex = 0;
    int row = 0, col = 0;
};

// Structured index of a generated instance: the label <-> vertex-id bijection
// (labels are also stored on the graph itself), the kind of every demand, and
// the role tables the completeness witnesses and structural checks consume.
// `special` holds the adjacency vertices (gen_pih / gen_xnlp) or the copy and
// validation vertices (gen_td); deleting it leaves only choice gadgets.
struct GadgetIndex {
    std::map<std::string, int> id;
    std::vector<DemandKind> demand_kind;
    std::vector<int> special;
    std::vector<AdjacencyInfo> adjacencies;    // gen_pih only
    std::vector<InstanceInfo> instances;       // gen_td only
    std::vector<CopyInfo> copies;              // gen_td only
    std::vector<ValidationInfo> validations;   // gen_td only
};

struct Generated {
    Instance inst;
    GadgetIndex index;
};

// Hardness-gadget generators. Each consumes a SourceInstance of the matching
// kind and emits an instance whose target is the completeness value:
//
//   gen_pih  (mdks, class support 1..3): one 2(4n+1)-cycle choice gadget per
//            class, one adjacency vertex per class pair sharing an edge;
//            target 2k + sigma where sigma = number of such pairs.
//   gen_xnlp (cmc): one choice gadget per (level, color) with w-paths of
//            length 3k, intra-level adjacency vertices e[i][j1,j2] on slots
//            (j2, j1) and inter-level e[i,i+1][j,j'] on slots (2k+j', k+j);
//            target 2rk + r*C(k,2) + (r-1)k^2.
//   gen_td   (mcq, k a power of two): recursive adjacency gadgets over choice
//            gadgets with alpha/beta pairs, copy vertices between instance
//            pairs, validation vertices on v_2 slots (same-class validation
//            demands join the two distinct instances, realizing self-loops);
//            target gamma*(n-1) + delta with gamma = 2k(2k-1),
//            delta = 5k^2 - 4k.
//
// All ids and demand orders are deterministic (depth-first construction).
// input_error on a source of the wrong kind or violating its invariants.
Generated gen_pih(const SourceInstance& src);
Generated gen_xnlp(const SourceInstance& src);
Generated gen_td(const SourceInstance& src);

// Completeness witnesses. `pick` chooses one vertex index per class, indexed
// by class id (pick[cls] for cls in 1..classes(), pick[0] ignored — the
// layout parse_selection emits). The selection must realize every demand the
// target counts: every nonempty class pair spans a picked edge (pih), the
// picks form a chained multicolored clique (xnlp) or a multicolored clique
// (td). Returns a verified routing with exactly `target` entries; throws
// input_error naming a missing edge otherwise.
Routing witness_pih(const SourceInstance& src, const Generated& gen, const std::vector<int>& pick);
Routing witness_xnlp(const SourceInstance& src, const Generated& gen, const std::vector<int>& pick);
Routing witness_td(const SourceInstance& src, const Generated& gen, const std::vector<int>& pick);

// Reproducible random instance: n vertices, m distinct edges, k demands with
// distinct endpoints (duplicate pairs allowed). input_error when m exceeds
// C(n,2) or k needs n < 2.
Instance random_instance(int n, int m, int k, std::uint64_t seed);

}  // namespace mndp
