#pragma once

#include <cstdint>
#include <optional>

#include "mndp/caps.hpp"
#include "mndp/instance.hpp"

namespace mndp {

// Vertex coloring with colors 1..tau (index 0 unused).
struct Coloring {
    int tau = 0;
    std::vector<int> color;
    bool operator==(const Coloring&) const = default;
};

// Independent uniform colors, deterministic per seed.
Coloring color_graph(int n, int tau, std::uint64_t seed);

// First demand (smallest index) routable inside the subgraph induced by the
// vertices whose color lies in `color_set` (bit c-1 = color c), together
// with its shortest path, ties broken by lexicographically smallest vertex
// sequence starting at the demand's first endpoint.
struct RoutableHit {
    int demand = 0;
    std::vector<int> path;
};
std::optional<RoutableHit> routable_within(const Instance& inst, const Coloring& coloring,
                                           std::uint32_t color_set);

// Subset DP over color sets:
//   T[S] = max over nonempty S' subseteq S of f(S') + T[S minus S']
// where f(S') = 1 iff some demand is routable using only colors in S'.
// Parts are restricted to those containing the smallest color of S, which
// leaves T unchanged and halves the submask work. `choice[S]` stores the
// maximizing part for traceback.
struct ColorSubsetTable {
    int tau = 0;
    std::vector<std::int16_t> value;   // size 2^tau
    std::vector<std::uint32_t> choice; // size 2^tau
    int best() const { return value.empty() ? 0 : value.back(); }
};
ColorSubsetTable colorful_max_routed(const Instance& inst, const Coloring& coloring);

// Walks the traceback; the result routes exactly T[full] demands on
// pairwise disjoint color classes (hence pairwise disjoint vertices).
Routing extract_routing(const Instance& inst, const Coloring& coloring,
                        const ColorSubsetTable& table);

// Coloring family such that every vertex subset of size <= tau receives
// pairwise distinct colors from some member. tau >= n yields the identity
// coloring alone. Otherwise the smaller of two certified constructions:
//   Direct    interval partitions of [n] into tau blocks
//   Composed  x -> ((a*x) mod p) mod tau^2 over a prime p, each composed
//             with the interval partitions of [tau^2]
enum class FamilyStrategy { Auto, Direct, Composed };
std::vector<Coloring> build_coloring_family(int n, int tau, const Caps& caps = default_caps(),
                                            FamilyStrategy strategy = FamilyStrategy::Auto);

enum class SweepMode { MonteCarlo, Derandomized, Exhaustive };
enum class Decision { Yes, No, Unknown };

struct SolveOptions {
    SweepMode mode = SweepMode::Derandomized;
    std::uint64_t seed = 1;
    double delta = 1.0 / 3.0;  // MonteCarlo failure probability
    bool parallel = true;      // OpenMP sweep kernel vs serial reference
    Caps caps = default_caps();
};

// decision: Yes iff some tried coloring routes >= ell demands. A negative
// answer is definite (No) for Derandomized/Exhaustive given a valid tau,
// and Unknown for MonteCarlo. `best` is the maximum routed over all tried
// colorings, so the call doubles as a bounded max-search; the sweep stops
// early once best >= ell. Identical inputs give identical results whether
// the parallel kernel or the serial reference runs.
struct SolveResult {
    Decision decision = Decision::Unknown;
    int best = 0;
    Routing routing;
    std::int64_t colorings_tried = 0;
};
SolveResult solve_with_tau(const Instance& inst, int ell, int tau,
                           const SolveOptions& opts = {});

// Number of colorings each mode would try (before early stopping).
std::int64_t planned_colorings(const Instance& inst, int tau, const SolveOptions& opts);

}  // namespace mndp
