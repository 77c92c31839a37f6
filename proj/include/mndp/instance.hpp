#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mndp/graph.hpp"

namespace mndp {

// Unordered demand pair. a == b only occurs in solver-internal instances
// produced by reductions; parsed user instances always have a != b.
struct Demand {
    int a = 0;
    int b = 0;
    bool operator==(const Demand&) const = default;
    bool touches(int v) const { return a == v || b == v; }
};

struct Instance {
    Graph g;
    std::vector<Demand> demands;
    std::optional<int> target;  // how many demands must be routed (<= k)

    Instance() = default;
    Instance(Graph graph, std::vector<Demand> dems, std::optional<int> tgt = std::nullopt);

    int k() const { return static_cast<int>(demands.size()); }
    bool operator==(const Instance&) const = default;
};

// One routed demand: the index into Instance::demands plus the vertex
// sequence of its path. Paths connect the demand endpoints in either order;
// a single-vertex path is only valid for an a == b demand.
struct RoutingEntry {
    int demand = 0;  // 0-based
    std::vector<int> path;
    bool operator==(const RoutingEntry&) const = default;
};

using Routing = std::vector<RoutingEntry>;

// Outcome of verify_routing. `ok` false comes with a human-readable
// violation; malformed input (ids out of range) throws instead.
struct Verdict {
    bool ok = false;
    int routed = 0;
    std::string violation;
};

// Checks every entry: path is a simple path of g, endpoints match the
// demand, no demand routed twice, all paths pairwise vertex-disjoint.
// Total for in-range ids; throws input_error on out-of-range vertex or
// demand ids.
Verdict verify_routing(const Instance& inst, const Routing& routing);

// Instance on g restricted to `vertices` plus the demands with both
// endpoints inside, relabeled to 1..|vertices|. Returns the instance,
// new->old vertex map, and for each kept demand its original index.
struct SubInstance {
    Instance inst;
    std::vector<int> vertex_map;   // new id -> old id (1-based)
    std::vector<int> demand_map;   // new demand idx -> old demand idx
};
SubInstance induced_instance(const Instance& inst, const std::vector<int>& vertices);

// Translates a routing on a SubInstance back to the parent instance.
Routing lift_routing(const SubInstance& sub, const Routing& routing);

}  // namespace mndp
