#include "mndp/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace mndp {

namespace {

// Backtracking search: route the chosen demands one by one, enumerating
// simple paths over still-unused vertices in ascending neighbor order.
struct PathSearch {
    const Instance& inst;
    std::int64_t budget;
    std::int64_t expansions = 0;
    bool exhausted = false;
    std::vector<char> used;
    std::vector<int> subset;  // demand indices to route
    Routing entries;

    PathSearch(const Instance& i, std::int64_t b)
        : inst(i), budget(b), used(i.g.n() + 1, 0) {}

    bool tick() {
        ++expansions;
        if (budget >= 0 && expansions > budget) {
            exhausted = true;
            return false;
        }
        return true;
    }

    bool route(std::size_t idx) {
        if (exhausted) return false;
        if (idx == subset.size()) return true;
        const Demand& d = inst.demands[subset[idx]];
        if (d.a == d.b) {
            if (used[d.a] || !tick()) return false;
            used[d.a] = 1;
            entries.push_back({subset[idx], {d.a}});
            if (route(idx + 1)) return true;
            entries.pop_back();
            used[d.a] = 0;
            return false;
        }
        if (used[d.a] || used[d.b]) return false;
        std::vector<int> path{d.a};
        used[d.a] = 1;
        bool ok = extend(idx, path, d.b);
        if (!ok) used[d.a] = 0;
        return ok;
    }

    bool extend(std::size_t idx, std::vector<int>& path, int target) {
        if (exhausted || !tick()) return false;
        for (int w : inst.g.neighbors(path.back())) {
            if (used[w]) continue;
            if (w == target) {
                path.push_back(w);
                used[w] = 1;
                entries.push_back({subset[idx], path});
                if (route(idx + 1)) return true;
                entries.pop_back();
                used[w] = 0;
                path.pop_back();
                if (exhausted) return false;
                continue;
            }
            path.push_back(w);
            used[w] = 1;
            if (extend(idx, path, target)) return true;
            used[w] = 0;
            path.pop_back();
            if (exhausted) return false;
        }
        return false;
    }
};

// Subsets sharing an endpoint vertex can never be routed disjointly.
bool endpoints_clash(const Instance& inst, const std::vector<int>& subset) {
    std::set<int> seen;
    for (int i : subset) {
        const Demand& d = inst.demands[i];
        if (!seen.insert(d.a).second) return true;
        if (d.b != d.a && !seen.insert(d.b).second) return true;
    }
    return false;
}

}  // namespace

OracleResult brute_force_opt(const Instance& inst, std::int64_t budget) {
    if (budget < 0) budget = default_caps().oracle_budget;
    int k = inst.k();
    std::int64_t spent = 0;
    for (int s = k; s >= 1; --s) {
        // lexicographic combinations of size s
        std::vector<int> subset(s);
        for (int i = 0; i < s; ++i) subset[i] = i;
        while (true) {
            if (!endpoints_clash(inst, subset)) {
                PathSearch search(inst, budget - spent);
                search.subset = subset;
                bool ok = search.route(0);
                spent += search.expansions;
                if (search.exhausted) return {std::nullopt, {}, spent};
                if (ok) return {s, std::move(search.entries), spent};
            }
            int i = s - 1;
            while (i >= 0 && subset[i] == k - s + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return {0, {}, spent};
}

MatchingResult max_matching(const Graph& g) {
    int n = g.n();
    std::vector<int> match(n + 1, 0), parent(n + 1, 0), base(n + 1, 0);

    auto lca = [&](int a, int b) {
        std::vector<char> visited(n + 1, 0);
        while (true) {
            a = base[a];
            visited[a] = 1;
            if (!match[a]) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (visited[b]) return b;
            b = parent[match[b]];
        }
    };

    std::vector<char> in_queue(n + 1, 0);
    std::queue<int> q;
    auto mark_path = [&](std::vector<char>& blossom, int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };

    auto find_augmenting_path = [&](int root) {
        std::fill(in_queue.begin(), in_queue.end(), 0);
        std::fill(parent.begin(), parent.end(), 0);
        for (int i = 0; i <= n; ++i) base[i] = i;
        while (!q.empty()) q.pop();
        q.push(root);
        in_queue[root] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] && parent[match[to]])) {
                    // odd cycle: contract the blossom
                    int cur_base = lca(v, to);
                    std::vector<char> blossom(n + 1, 0);
                    mark_path(blossom, v, cur_base, to);
                    mark_path(blossom, to, cur_base, v);
                    for (int i = 1; i <= n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!in_queue[i]) {
                                in_queue[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (!parent[to]) {
                    parent[to] = v;
                    if (!match[to]) {
                        // augment along the alternating path to the root
                        int u = to;
                        while (u) {
                            int pv = parent[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    in_queue[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    };

    int size = 0;
    for (int v = 1; v <= n; ++v)
        if (!match[v] && find_augmenting_path(v)) ++size;
    return {size, std::move(match)};
}

ClusterRouteResult cluster_route_opt(const Instance& inst, const std::vector<int>& deleted) {
    const Graph& g = inst.g;
    std::vector<char> alive(g.n() + 1, 1);
    for (int v : deleted) {
        if (v < 1 || v > g.n())
            throw input_error("cluster_route_opt: deleted vertex " + std::to_string(v) +
                              " out of range");
        alive[v] = 0;
    }
    auto comps = connected_components(g, alive);
    std::vector<int> comp_of(g.n() + 1, -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (std::size_t i = 0; i < comps[c].size(); ++i) {
            comp_of[comps[c][i]] = static_cast<int>(c);
            for (std::size_t j = i + 1; j < comps[c].size(); ++j)
                if (!g.has_edge(comps[c][i], comps[c][j])) {
                    std::string who;
                    for (int v : comps[c]) who += (who.empty() ? "" : ",") + std::to_string(v);
                    throw input_error("cluster_route_opt: component {" + who +
                                      "} is not a clique (" + std::to_string(comps[c][i]) + "," +
                                      std::to_string(comps[c][j]) + " non-adjacent)");
                }
        }
    }

    // one auxiliary edge per demand pair living inside a single clique
    Graph aux(g.n());
    std::map<std::pair<int, int>, int> first_demand;  // edge -> smallest demand index
    for (int i = 0; i < inst.k(); ++i) {
        const Demand& d = inst.demands[i];
        if (d.a == d.b)
            throw input_error("cluster_route_opt: demand with equal endpoints unsupported");
        if (!alive[d.a] || !alive[d.b] || comp_of[d.a] != comp_of[d.b]) continue;
        auto key = std::minmax(d.a, d.b);
        if (first_demand.emplace(std::pair{key.first, key.second}, i).second)
            aux.add_edge(d.a, d.b);
    }

    MatchingResult matching = max_matching(aux);
    ClusterRouteResult result;
    result.value = matching.size;
    for (int v = 1; v <= g.n(); ++v) {
        int w = matching.mate[v];
        if (w > v) {
            int demand = first_demand.at({v, w});
            const Demand& d = inst.demands[demand];
            result.routing.push_back({demand, {d.a, d.b}});
        }
    }
    return result;
}

}  // namespace mndp
