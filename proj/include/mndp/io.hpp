#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mndp/instance.hpp"

namespace mndp {

// Instance text format ('#' starts a comment, LF line endings):
//   p mndp <n> <m> <k>
//   e <u> <v>              (m lines)
//   d <s> <t>              (k lines, s != t)
//   l <ell>                (optional, 0 <= ell <= k)
//   label <v> <text>       (optional, once per vertex)
// Errors carry 1-based line numbers. Duplicate edges, self-loops, and
// equal-endpoint demands are rejected.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Routing text format, demand indices 1-based:
//   r <demand-index> <v1> ... <vj>
Routing parse_routing(const std::string& text);
std::string serialize_routing(const Routing& routing);

// Witness file: one line per parameter.
//   w <vc|cvd|vi|fvs> <vertex> ...
//   w fes <u,v> ...
//   w td <parent-of-1> ... <parent-of-n>   (0 = root)
struct WitnessFile {
    std::map<std::string, std::vector<int>> vertex_sets;      // vc/cvd/vi/fvs
    std::vector<std::pair<int, int>> fes_edges;
    std::vector<int> td_parents;  // size n when present
    bool has(const std::string& key) const;
};
WitnessFile parse_witness(const std::string& text);

// Reduction source instances: k (or r*k) classes of n vertices each,
// edges between distinct classes only.
//   p mcq <k> <n>      e <i>.<p> <j>.<q>
//   p mdks <k> <n>     e <i>.<p> <j>.<q>     (class support 1..3)
//   p cmc <r> <k> <n>  e <i>.<j>.<p> <i'>.<j'>.<q>   (|i - i'| <= 1)
struct SourceVertex {
    int cls = 0;    // class id: [1..k] for mcq/mdks, (level-1)*k+color for cmc
    int index = 0;  // [1..n]
    bool operator==(const SourceVertex&) const = default;
    auto operator<=>(const SourceVertex&) const = default;
};

struct SourceInstance {
    enum class Kind { MulticoloredClique, DistributedKSubgraph, ChainedMulticoloredClique };
    Kind kind = Kind::MulticoloredClique;
    int r = 1;  // levels (1 unless chained)
    int k = 0;  // classes (colors per level when chained)
    int n = 0;  // vertices per class
    std::vector<std::pair<SourceVertex, SourceVertex>> edges;

    int classes() const { return r * k; }
    int level(int cls) const { return (cls - 1) / k + 1; }
    int color(int cls) const { return (cls - 1) % k + 1; }
    bool has_edge(SourceVertex a, SourceVertex b) const;
};
SourceInstance parse_source(const std::string& text);

// Selection file for witness construction: one chosen index per class.
//   s <i> <p>        (mcq/mdks)
//   s <i> <j> <p>    (cmc)
// Returns the chosen index per class id, 1-based, all classes required.
std::vector<int> parse_selection(const std::string& text, const SourceInstance& src);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mndp
