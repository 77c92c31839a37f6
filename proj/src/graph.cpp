#include "mndp/graph.hpp"

#include <algorithm>
#include <queue>

namespace mndp {

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
        throw input_error("graph: duplicate edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
    edges_.emplace_back(u, v);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(n_ + 1);
    labels_[v] = std::move(label);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    return connected_components(g, std::vector<char>(g.n() + 1, 1));
}

std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const std::vector<char>& alive) {
    std::vector<char> seen(g.n() + 1, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 1; s <= g.n(); ++s) {
        if (!alive[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& vertices) {
    std::vector<int> to_old(vertices.size() + 1, 0);
    std::vector<int> to_new(g.n() + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        to_old[i + 1] = vertices[i];
        to_new[vertices[i]] = static_cast<int>(i + 1);
    }
    Graph h(static_cast<int>(vertices.size()));
    for (auto [u, v] : g.edges())
        if (to_new[u] && to_new[v]) h.add_edge(to_new[u], to_new[v]);
    if (g.has_labels())
        for (std::size_t i = 0; i < vertices.size(); ++i)
            h.set_label(static_cast<int>(i + 1), g.label(vertices[i]));
    return {std::move(h), std::move(to_old)};
}

std::vector<int> shortest_path(const Graph& g, int a, int b,
                               const std::vector<char>& allowed) {
    if (a < 1 || a > g.n() || b < 1 || b > g.n()) throw input_error("shortest_path: vertex out of range");
    if (!allowed[a] || !allowed[b]) return {};
    if (a == b) return {a};
    // BFS from b; then greedily walk from a toward b picking the smallest
    // neighbor id at each step. That yields the lexicographically smallest
    // shortest vertex sequence starting at a.
    std::vector<int> dist(g.n() + 1, -1);
    std::queue<int> q;
    dist[b] = 0;
    q.push(b);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (allowed[w] && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    if (dist[a] < 0) return {};
    std::vector<int> path{a};
    int cur = a;
    while (cur != b) {
        for (int w : g.neighbors(cur))
            if (allowed[w] && dist[w] == dist[cur] - 1) {
                path.push_back(w);
                cur = w;
                break;
            }
    }
    return path;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return connected_components(g).size() == 1;
}

}  // namespace mndp
