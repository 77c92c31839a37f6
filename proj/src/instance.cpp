#include "mndp/instance.hpp"

#include <algorithm>

namespace mndp {

Instance::Instance(Graph graph, std::vector<Demand> dems, std::optional<int> tgt)
    : g(std::move(graph)), demands(std::move(dems)), target(tgt) {
    for (const auto& d : demands)
        if (d.a < 1 || d.a > g.n() || d.b < 1 || d.b > g.n())
            throw input_error("instance: demand endpoint out of range");
    if (target && (*target < 0 || *target > k()))
        throw input_error("instance: target " + std::to_string(*target) +
                          " outside 0.." + std::to_string(k()));
}

Verdict verify_routing(const Instance& inst, const Routing& routing) {
    const Graph& g = inst.g;
    std::vector<char> used(g.n() + 1, 0);
    std::vector<char> routed(inst.demands.size(), 0);
    for (const auto& entry : routing) {
        if (entry.demand < 0 || entry.demand >= inst.k())
            throw input_error("routing: demand index " + std::to_string(entry.demand + 1) +
                              " out of range");
        for (int v : entry.path)
            if (v < 1 || v > g.n())
                throw input_error("routing: vertex " + std::to_string(v) + " out of range");

        auto fail = [&](const std::string& why) {
            return Verdict{false, 0, "demand " + std::to_string(entry.demand + 1) + ": " + why};
        };
        if (routed[entry.demand]) return fail("routed twice");
        routed[entry.demand] = 1;
        if (entry.path.empty()) return fail("empty path");
        const Demand& d = inst.demands[entry.demand];
        int s = entry.path.front(), t = entry.path.back();
        if (entry.path.size() == 1) {
            if (d.a != d.b || d.a != s) return fail("single-vertex path for a two-endpoint demand");
        } else if (!((s == d.a && t == d.b) || (s == d.b && t == d.a))) {
            return fail("path endpoints do not match the demand");
        }
        for (std::size_t i = 0; i + 1 < entry.path.size(); ++i)
            if (!g.has_edge(entry.path[i], entry.path[i + 1]))
                return fail("consecutive path vertices " + std::to_string(entry.path[i]) + "," +
                            std::to_string(entry.path[i + 1]) + " are not adjacent");
        for (int v : entry.path) {
            if (used[v])
                return fail("vertex " + std::to_string(v) + " used by another path");
            used[v] = 1;
        }
    }
    return Verdict{true, static_cast<int>(routing.size()), ""};
}

SubInstance induced_instance(const Instance& inst, const std::vector<int>& vertices) {
    auto [h, to_old] = induced_subgraph(inst.g, vertices);
    std::vector<int> to_new(inst.g.n() + 1, 0);
    for (std::size_t i = 1; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
    std::vector<Demand> dems;
    std::vector<int> dmap;
    for (int i = 0; i < inst.k(); ++i) {
        const Demand& d = inst.demands[i];
        if (to_new[d.a] && to_new[d.b]) {
            dems.push_back({to_new[d.a], to_new[d.b]});
            dmap.push_back(i);
        }
    }
    return {Instance(std::move(h), std::move(dems)), std::move(to_old), std::move(dmap)};
}

Routing lift_routing(const SubInstance& sub, const Routing& routing) {
    Routing out;
    out.reserve(routing.size());
    for (const auto& e : routing) {
        RoutingEntry lifted;
        lifted.demand = sub.demand_map.at(e.demand);
        lifted.path.reserve(e.path.size());
        for (int v : e.path) lifted.path.push_back(sub.vertex_map.at(v));
        out.push_back(std::move(lifted));
    }
    return out;
}

}  // namespace mndp
