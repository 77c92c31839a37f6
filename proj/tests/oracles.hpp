#pragma once

// Test-only reference implementations, deliberately structured differently
// from the library code they check: subset sweeps, permutation sweeps, and
// path-set packing instead of the production algorithms.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mndp/instance.hpp"

namespace testref {

using mndp::Demand;
using mndp::Graph;
using mndp::Instance;

inline Graph make_path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph make_cycle(int n) {
    Graph g = make_path(n);
    g.add_edge(n, 1);
    return g;
}

inline Graph make_complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph make_star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
    return g;
}

// --- max node-disjoint paths by path-set packing ------------------------

inline void all_simple_paths(const Graph& g, int a, int b, std::vector<int>& path,
                             std::vector<char>& used, std::vector<std::vector<int>>& out) {
    if (path.back() == b) {
        out.push_back(path);
        return;
    }
    for (int w : g.neighbors(path.back())) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        all_simple_paths(g, a, b, path, used, out);
        path.pop_back();
        used[w] = 0;
    }
}

inline int pack_paths(const Instance& inst, std::size_t idx, std::vector<char>& used) {
    if (idx == inst.demands.size()) return 0;
    int best = pack_paths(inst, idx + 1, used);  // skip this demand
    const Demand& d = inst.demands[idx];
    std::vector<std::vector<int>> paths;
    if (d.a == d.b) {
        if (!used[d.a]) paths.push_back({d.a});
    } else if (!used[d.a] && !used[d.b]) {
        std::vector<int> path{d.a};
        std::vector<char> local = used;
        local[d.a] = 1;
        all_simple_paths(inst.g, d.a, d.b, path, local, paths);
    }
    for (const auto& p : paths) {
        for (int v : p) used[v] = 1;
        best = std::max(best, 1 + pack_paths(inst, idx + 1, used));
        for (int v : p) used[v] = 0;
    }
    return best;
}

inline int exhaustive_opt(const Instance& inst) {
    std::vector<char> used(inst.g.n() + 1, 0);
    return pack_paths(inst, 0, used);
}

// --- matching by edge recursion -----------------------------------------

inline int match_rec(const std::vector<std::pair<int, int>>& edges, std::size_t i,
                     std::vector<char>& used) {
    if (i == edges.size()) return 0;
    int best = match_rec(edges, i + 1, used);
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
        used[u] = used[v] = 1;
        best = std::max(best, 1 + match_rec(edges, i + 1, used));
        used[u] = used[v] = 0;
    }
    return best;
}

inline int exhaustive_matching(const Graph& g) {
    std::vector<char> used(g.n() + 1, 0);
    return match_rec(g.edges(), 0, used);
}

// --- structural parameters by subset / permutation sweeps ----------------

inline std::vector<std::vector<int>> comps_without(const Graph& g, unsigned removed) {
    std::vector<char> alive(g.n() + 1, 1);
    for (int v = 1; v <= g.n(); ++v)
        if (removed >> (v - 1) & 1u) alive[v] = 0;
    return mndp::connected_components(g, alive);
}

inline bool covers_all_edges(const Graph& g, unsigned subset) {
    for (auto [u, v] : g.edges())
        if (!(subset >> (u - 1) & 1u) && !(subset >> (v - 1) & 1u)) return false;
    return true;
}

inline bool is_cluster_after(const Graph& g, unsigned removed) {
    for (const auto& comp : comps_without(g, removed))
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.has_edge(comp[i], comp[j])) return false;
    return true;
}

inline bool is_forest_after(const Graph& g, unsigned removed) {
    int n_alive = 0, m_alive = 0;
    for (int v = 1; v <= g.n(); ++v)
        if (!(removed >> (v - 1) & 1u)) ++n_alive;
    for (auto [u, v] : g.edges())
        if (!(removed >> (u - 1) & 1u) && !(removed >> (v - 1) & 1u)) ++m_alive;
    return m_alive == n_alive - static_cast<int>(comps_without(g, removed).size());
}

inline int exhaustive_min_vc(const Graph& g) {
    int best = g.n();
    for (unsigned s = 0; s < (1u << g.n()); ++s)
        if (covers_all_edges(g, s)) best = std::min(best, std::popcount(s));
    return best;
}

inline int exhaustive_min_cvd(const Graph& g) {
    int best = g.n();
    for (unsigned s = 0; s < (1u << g.n()); ++s)
        if (is_cluster_after(g, s)) best = std::min(best, std::popcount(s));
    return best;
}

inline int exhaustive_min_fvs(const Graph& g) {
    int best = g.n();
    for (unsigned s = 0; s < (1u << g.n()); ++s)
        if (is_forest_after(g, s)) best = std::min(best, std::popcount(s));
    return best;
}

inline int exhaustive_min_vi(const Graph& g) {
    int best = g.n();
    for (unsigned s = 0; s < (1u << g.n()); ++s) {
        int maxcomp = 0;
        for (const auto& comp : comps_without(g, s))
            maxcomp = std::max(maxcomp, static_cast<int>(comp.size()));
        best = std::min(best, std::popcount(s) + maxcomp);
    }
    return best;
}

// Treedepth via elimination orderings: the first vertex of each component
// in the ordering becomes its root.
inline int depth_of_ordering(const Graph& g, const std::vector<int>& order,
                             const std::vector<int>& comp) {
    if (comp.empty()) return 0;
    int root = comp[0];
    for (int v : comp)
        if (order[v] < order[root]) root = v;
    std::vector<char> alive(g.n() + 1, 0);
    for (int v : comp) alive[v] = 1;
    alive[root] = 0;
    int deepest = 0;
    for (const auto& sub : mndp::connected_components(g, alive)) {
        bool inside = std::binary_search(comp.begin(), comp.end(), sub[0]);
        if (inside) deepest = std::max(deepest, depth_of_ordering(g, order, sub));
    }
    return 1 + deepest;
}

inline int ordering_treedepth(const Graph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 1);
    int best = g.n() + 1;
    do {
        std::vector<int> order(g.n() + 1);
        for (int i = 0; i < g.n(); ++i) order[perm[i]] = i;
        int depth = 0;
        for (const auto& comp : mndp::connected_components(g))
            depth = std::max(depth, depth_of_ordering(g, order, comp));
        best = std::min(best, depth);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// --- deterministic instance sampler for unit sweeps ----------------------

inline Instance random_test_instance(std::uint64_t seed, int max_n = 8, int max_m = 14,
                                     int max_k = 5) {
    std::mt19937_64 rng(seed);
    int n = 2 + static_cast<int>(rng() % (max_n - 1));
    int pairs = n * (n - 1) / 2;
    int m = static_cast<int>(rng() % (std::min(max_m, pairs) + 1));
    Graph g(n);
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    for (int i = 0; i < m; ++i) g.add_edge(all[i].first, all[i].second);
    int k = 1 + static_cast<int>(rng() % max_k);
    std::vector<Demand> dems;
    for (int i = 0; i < k; ++i) {
        int a = 1 + static_cast<int>(rng() % n);
        int b = 1 + static_cast<int>(rng() % n);
        if (a == b) b = a % n + 1;
        dems.push_back({a, b});
    }
    return Instance(std::move(g), std::move(dems));
}

}  // namespace testref
