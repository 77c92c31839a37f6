#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mndp/caps.hpp"

namespace mndp {

// Undirected simple graph on vertices 1..n. Edges are stored normalized
// (min,max) in insertion order; adjacency lists are kept sorted so that
// every traversal in the library is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(check_n(n)), adj_(n + 1) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    // Throws input_error on out-of-range endpoints, self-loops, duplicates.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Optional per-vertex labels ("" = unlabeled).
    void set_label(int v, std::string label);
    const std::string& label(int v) const { return labels_.at(v); }
    bool has_labels() const { return !labels_.empty(); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
    }

private:
    static int check_n(int n) {
        if (n < 0) throw input_error("graph: negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw input_error("graph: vertex " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;  // size n_+1 once any label is set
};

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Component lists restricted to `vertices` (alive mask semantics).
std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const std::vector<char>& alive);

// Induced subgraph on `vertices` (sorted ascending); vertex i of the result
// is vertices[i-1]. Labels carry over. Returns the new graph plus the map
// new id -> old id.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& vertices);

// Lexicographically smallest shortest path from a to b among `allowed`
// vertices, or empty if none. allowed has size n+1; a==b yields {a}.
std::vector<int> shortest_path(const Graph& g, int a, int b,
                               const std::vector<char>& allowed);

bool is_connected(const Graph& g);

}  // namespace mndp
