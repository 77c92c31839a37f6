#include "mndp/structural.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace mndp {

namespace {

struct Exhausted {};

struct Budget {
    std::int64_t left;
    void spend() {
        if (--left < 0) throw Exhausted{};
    }
};

std::uint32_t bit(int v) { return 1u << (v - 1); }

// adjacency as vertex masks; callers guarantee n <= 32
std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.n() + 1, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return adj;
}

std::vector<int> mask_vertices(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (mask & bit(v)) out.push_back(v);
    return out;
}

// connected components of the subgraph induced by `alive`, each a mask,
// ordered by smallest member
std::vector<std::uint32_t> mask_components(const std::vector<std::uint32_t>& adj, int n,
                                           std::uint32_t alive) {
    std::vector<std::uint32_t> comps;
    std::uint32_t seen = 0;
    for (int v = 1; v <= n; ++v) {
        if (!(alive & bit(v)) || (seen & bit(v))) continue;
        std::uint32_t comp = bit(v), frontier = bit(v);
        while (frontier) {
            std::uint32_t next = 0;
            for (int u = 1; u <= n; ++u)
                if (frontier & bit(u)) next |= adj[u] & alive & ~comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

struct VcSearch {
    int n;
    const std::vector<std::uint32_t>& adj;
    Budget& budget;
    int best;
    std::vector<int> best_set, cur;

    void rec(std::uint32_t alive) {
        budget.spend();
        int u = 0, du = 0;
        for (int v = 1; v <= n; ++v) {
            if (!(alive & bit(v))) continue;
            int d = std::popcount(adj[v] & alive);
            if (d > du) {
                du = d;
                u = v;
            }
        }
        if (du == 0) {
            if (static_cast<int>(cur.size()) < best) {
                best = static_cast<int>(cur.size());
                best_set = cur;
            }
            return;
        }
        if (static_cast<int>(cur.size()) + 1 >= best) return;
        cur.push_back(u);
        rec(alive & ~bit(u));
        cur.pop_back();
        std::uint32_t neigh = adj[u] & alive;  // any cover misses u only if it has all of N(u)
        if (static_cast<int>(cur.size()) + std::popcount(neigh) < best) {
            std::size_t mark = cur.size();
            for (int v = 1; v <= n; ++v)
                if (neigh & bit(v)) cur.push_back(v);
            rec(alive & ~neigh & ~bit(u));
            cur.resize(mark);
        }
    }
};

struct CvdSearch {
    int n;
    const std::vector<std::uint32_t>& adj;
    Budget& budget;
    int best;
    std::vector<int> best_set, cur;

    // lexicographically first induced path a-b-c (b the middle), or zeros
    std::array<int, 3> find_p3(std::uint32_t alive) const {
        for (int b = 1; b <= n; ++b) {
            if (!(alive & bit(b))) continue;
            std::uint32_t neigh = adj[b] & alive;
            for (int a = 1; a <= n; ++a) {
                if (!(neigh & bit(a))) continue;
                for (int c = a + 1; c <= n; ++c)
                    if ((neigh & bit(c)) && !(adj[a] & bit(c))) return {a, b, c};
            }
        }
        return {0, 0, 0};
    }

    void rec(std::uint32_t alive) {
        budget.spend();
        auto p3 = find_p3(alive);
        if (p3[0] == 0) {
            if (static_cast<int>(cur.size()) < best) {
                best = static_cast<int>(cur.size());
                best_set = cur;
            }
            return;
        }
        if (static_cast<int>(cur.size()) + 1 >= best) return;
        for (int x : p3) {
            cur.push_back(x);
            rec(alive & ~bit(x));
            cur.pop_back();
        }
    }
};

struct ViSearch {
    int n;
    const std::vector<std::uint32_t>& adj;
    Budget& budget;
    int t = 0;
    std::unordered_set<std::uint32_t> failed;
    std::vector<int> cur, found;

    bool rec(std::uint32_t alive) {
        budget.spend();
        if (failed.count(alive)) return false;
        int allowance = t - static_cast<int>(cur.size());
        std::uint32_t oversized = 0;
        for (std::uint32_t comp : mask_components(adj, n, alive))
            if (std::popcount(comp) > allowance) {
                oversized = comp;
                break;
            }
        if (!oversized) {
            found = cur;
            return true;
        }
        if (allowance > 0) {
            // every extension keeping components small must delete a vertex of
            // some connected set of allowance + 1 vertices inside this component
            std::vector<int> probe;
            std::uint32_t taken = 0;
            for (int v = 1; v <= n; ++v)
                if (oversized & bit(v)) {
                    probe.push_back(v);
                    taken = bit(v);
                    break;
                }
            while (static_cast<int>(probe.size()) < allowance + 1) {
                int grow = 0;
                for (int v = 1; v <= n; ++v)
                    if ((oversized & bit(v)) && !(taken & bit(v)) && (adj[v] & taken)) {
                        grow = v;
                        break;
                    }
                probe.push_back(grow);
                taken |= bit(grow);
            }
            for (int x : probe) {
                cur.push_back(x);
                bool ok = rec(alive & ~bit(x));
                cur.pop_back();
                if (ok) return true;
            }
        }
        failed.insert(alive);
        return false;
    }
};

struct TdSearch {
    int n;
    const std::vector<std::uint32_t>& adj;
    Budget& budget;
    std::unordered_map<std::uint32_t, std::pair<int, int>> memo;  // mask -> {depth, root}

    int solve(std::uint32_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second.first;
        budget.spend();
        if (std::popcount(mask) == 1) {
            int v = std::countr_zero(mask) + 1;
            memo[mask] = {1, v};
            return 1;
        }
        int best = INT_MAX, best_root = 0;
        for (int v = 1; v <= n; ++v) {
            if (!(mask & bit(v))) continue;
            int worst = 0;
            for (std::uint32_t comp : mask_components(adj, n, mask & ~bit(v))) {
                worst = std::max(worst, solve(comp));
                if (1 + worst >= best) break;
            }
            if (1 + worst < best) {
                best = 1 + worst;
                best_root = v;
            }
        }
        memo[mask] = {best, best_root};
        return best;
    }

    void build(std::uint32_t mask, int parent, EliminationForest& f) const {
        int r = memo.at(mask).second;
        f.parent[r] = parent;
        if (parent == 0) f.roots.push_back(r);
        for (std::uint32_t comp : mask_components(adj, n, mask & ~bit(r))) build(comp, r, f);
    }
};

EliminationForest dfs_fallback(const Graph& g) {
    EliminationForest f;
    int n = g.n();
    f.parent.assign(n + 1, 0);
    f.exact = false;
    std::vector<int> depth(n + 1, 0);
    std::vector<char> visited(n + 1, 0);
    for (int s = 1; s <= n; ++s) {
        if (visited[s]) continue;
        f.roots.push_back(s);
        std::vector<std::pair<int, int>> stack{{s, 0}};
        while (!stack.empty()) {
            auto [v, par] = stack.back();
            stack.pop_back();
            if (visited[v]) continue;
            visited[v] = 1;
            f.parent[v] = par;
            depth[v] = par == 0 ? 1 : depth[par] + 1;
            f.depth = std::max(f.depth, depth[v]);
            const auto& nb = g.neighbors(v);
            for (auto it = nb.rbegin(); it != nb.rend(); ++it)
                if (!visited[*it]) stack.push_back({*it, v});
        }
    }
    return f;
}

ParamResult unknown_param() { return {std::nullopt, {}, false}; }

}  // namespace

ParamResult vertex_cover_number(const Graph& g, const Caps& caps) {
    if (g.n() == 0) return {0, {}, true};
    if (g.n() > caps.exact_param_n) return unknown_param();
    auto adj = adjacency_masks(g);
    Budget budget{caps.oracle_budget};
    std::uint32_t full = bit(g.n() + 1) - 1;
    VcSearch search{g.n(), adj, budget, g.n(), mask_vertices(full, g.n()), {}};
    try {
        search.rec(full);
    } catch (const Exhausted&) {
        return unknown_param();
    }
    std::sort(search.best_set.begin(), search.best_set.end());
    return {search.best, search.best_set, true};
}

ParamResult cluster_deletion_number(const Graph& g, const Caps& caps) {
    if (g.n() == 0) return {0, {}, true};
    if (g.n() > caps.cvd_exact_n) return unknown_param();
    auto adj = adjacency_masks(g);
    Budget budget{caps.oracle_budget};
    std::uint32_t full = bit(g.n() + 1) - 1;
    CvdSearch search{g.n(), adj, budget, g.n(), mask_vertices(full, g.n()), {}};
    try {
        search.rec(full);
    } catch (const Exhausted&) {
        return unknown_param();
    }
    std::sort(search.best_set.begin(), search.best_set.end());
    return {search.best, search.best_set, true};
}

ParamResult vertex_integrity(const Graph& g, const Caps& caps) {
    if (g.n() == 0) return {0, {}, true};
    if (g.n() > caps.vi_exact_n) return unknown_param();
    auto adj = adjacency_masks(g);
    Budget budget{caps.oracle_budget};
    ViSearch search{g.n(), adj, budget};
    std::uint32_t full = bit(g.n() + 1) - 1;
    try {
        for (int t = 1; t <= g.n(); ++t) {
            search.t = t;
            search.failed.clear();
            search.cur.clear();
            if (search.rec(full)) {
                std::sort(search.found.begin(), search.found.end());
                return {t, search.found, true};
            }
        }
    } catch (const Exhausted&) {
        return unknown_param();
    }
    return unknown_param();  // unreachable: t = n always succeeds
}

ParamResult feedback_vertex_number(const Graph& g, const Caps& caps) {
    // strip to the 2-core; every cycle lives there and no optimal set needs
    // a vertex outside it
    int n = g.n();
    std::vector<int> deg(n + 1, 0);
    std::vector<char> alive(n + 1, 1);
    for (auto [u, v] : g.edges()) {
        ++deg[u];
        ++deg[v];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= n; ++v)
            if (alive[v] && deg[v] <= 1) {
                alive[v] = 0;
                changed = true;
                for (int u : g.neighbors(v))
                    if (alive[u]) --deg[u];
            }
    }
    std::vector<int> core;
    for (int v = 1; v <= n; ++v)
        if (alive[v]) core.push_back(v);
    if (core.empty()) return {0, {}, true};
    if (static_cast<int>(core.size()) > caps.fvs_exact_n) return unknown_param();

    std::vector<std::pair<int, int>> core_edges;
    for (auto [u, v] : g.edges())
        if (alive[u] && alive[v]) core_edges.push_back({u, v});

    Budget budget{caps.oracle_budget};
    std::vector<int> parent(n + 1);
    auto acyclic_without = [&](const std::vector<int>& removed) {
        std::vector<char> gone(n + 1, 0);
        for (int v : removed) gone[v] = 1;
        for (int v = 1; v <= n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [u, v] : core_edges) {
            if (gone[u] || gone[v]) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
        return true;
    };

    int csize = static_cast<int>(core.size());
    std::vector<int> pick;
    try {
        for (int s = 0; s <= csize; ++s) {
            pick.assign(s, 0);
            // lexicographic combinations of core vertices
            std::vector<int> idx(s);
            for (int i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                budget.spend();
                for (int i = 0; i < s; ++i) pick[i] = core[idx[i]];
                if (acyclic_without(pick)) return {s, pick, true};
                int i = s - 1;
                while (i >= 0 && idx[i] == csize - s + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    } catch (const Exhausted&) {
        return unknown_param();
    }
    return unknown_param();  // unreachable: removing the whole core works
}

FesResult feedback_edge_number(const Graph& g) {
    FesResult res;
    std::vector<int> parent(g.n() + 1);
    for (int v = 1; v <= g.n(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) {
        int ru = find(u), rv = find(v);
        if (ru == rv)
            res.edges.push_back({u, v});
        else
            parent[ru] = rv;
    }
    res.value = static_cast<int>(res.edges.size());
    return res;
}

EliminationForest treedepth(const Graph& g, const Caps& caps) {
    if (g.n() == 0) return {{0}, {}, 0, true};
    if (g.n() > caps.td_exact_n) return dfs_fallback(g);
    auto adj = adjacency_masks(g);
    Budget budget{caps.oracle_budget};
    TdSearch search{g.n(), adj, budget};
    std::uint32_t full = bit(g.n() + 1) - 1;
    auto comps = mask_components(adj, g.n(), full);
    EliminationForest f;
    f.parent.assign(g.n() + 1, 0);
    try {
        for (std::uint32_t comp : comps) f.depth = std::max(f.depth, search.solve(comp));
        for (std::uint32_t comp : comps) search.build(comp, 0, f);
    } catch (const Exhausted&) {
        return dfs_fallback(g);
    }
    std::sort(f.roots.begin(), f.roots.end());
    return f;
}

bool valid_elimination_forest(const Graph& g, const EliminationForest& f) {
    int n = g.n();
    if (static_cast<int>(f.parent.size()) != n + 1) return false;
    std::vector<int> depth(n + 1, -1);
    auto depth_of = [&](auto&& self, int v) -> int {
        if (depth[v] >= 0) return depth[v];
        if (depth[v] == -2) return INT_MIN;  // cycle
        depth[v] = -2;
        int p = f.parent[v];
        if (p < 0 || p > n || p == v) return INT_MIN;
        int d = p == 0 ? 1 : self(self, p) + 1;
        if (d <= 0) return INT_MIN;
        return depth[v] = d;
    };
    int deepest = 0;
    for (int v = 1; v <= n; ++v) {
        int d = depth_of(depth_of, v);
        if (d <= 0) return false;
        deepest = std::max(deepest, d);
    }
    if (deepest != f.depth) return false;
    std::vector<int> roots;
    for (int v = 1; v <= n; ++v)
        if (f.parent[v] == 0) roots.push_back(v);
    if (roots != f.roots) return false;
    for (auto [u, v] : g.edges()) {
        int a = u, b = v;  // climb the deeper endpoint until they meet
        while (depth[a] > depth[b]) a = f.parent[a];
        while (depth[b] > depth[a]) b = f.parent[b];
        if (a != b) return false;
    }
    return true;
}

ParamReport compute_params(const Graph& g, const Caps& caps) {
    ParamReport report;
    report.vc = vertex_cover_number(g, caps);
    report.cvd = cluster_deletion_number(g, caps);
    report.vi = vertex_integrity(g, caps);
    report.fvs = feedback_vertex_number(g, caps);
    report.fes = feedback_edge_number(g);
    report.td = treedepth(g, caps);
    return report;
}

}  // namespace mndp
