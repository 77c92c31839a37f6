#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mndp/structural.hpp"
#include "oracles.hpp"

using namespace mndp;

namespace {

Graph random_graph(std::uint64_t seed, int max_n) {
    std::mt19937_64 rng(seed);
    int n = 1 + static_cast<int>(rng() % max_n);
    Graph g(n);
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t m = all.empty() ? 0 : rng() % (all.size() + 1);
    for (std::size_t i = 0; i < m; ++i) g.add_edge(all[i].first, all[i].second);
    return g;
}

unsigned to_mask(const std::vector<int>& vertices) {
    unsigned mask = 0;
    for (int v : vertices) mask |= 1u << (v - 1);
    return mask;
}

int max_comp_size(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> alive(g.n() + 1, 1);
    for (int v : removed) alive[v] = 0;
    int best = 0;
    for (const auto& comp : connected_components(g, alive))
        best = std::max(best, static_cast<int>(comp.size()));
    return best;
}

}  // namespace

TEST_CASE("parameters of a four-path") {
    Graph g = testref::make_path(4);
    CHECK(vertex_cover_number(g).value == 2);
    CHECK(cluster_deletion_number(g).value == 1);
    CHECK(vertex_integrity(g).value == 3);
    CHECK(feedback_vertex_number(g).value == 0);
    CHECK(feedback_edge_number(g).value == 0);
    CHECK(treedepth(g).depth == 3);
}

TEST_CASE("parameters of a five-cycle") {
    Graph g = testref::make_cycle(5);
    CHECK(vertex_cover_number(g).value == 3);
    CHECK(cluster_deletion_number(g).value == 2);
    CHECK(vertex_integrity(g).value == 4);
    CHECK(feedback_vertex_number(g).value == 1);
    CHECK(feedback_edge_number(g).value == 1);
    CHECK(treedepth(g).depth == 4);
}

TEST_CASE("parameters of a clique") {
    Graph g = testref::make_complete(4);
    CHECK(vertex_cover_number(g).value == 3);
    CHECK(cluster_deletion_number(g).value == 0);
    CHECK(cluster_deletion_number(g).witness.empty());
    CHECK(vertex_integrity(g).value == 4);
    CHECK(feedback_vertex_number(g).value == 2);
    CHECK(feedback_edge_number(g).value == 3);
    CHECK(treedepth(g).depth == 4);
}

TEST_CASE("parameters of a star") {
    Graph g = testref::make_star(4);
    CHECK(vertex_cover_number(g).value == 1);
    CHECK(vertex_cover_number(g).witness == std::vector<int>{1});
    CHECK(cluster_deletion_number(g).value == 1);
    CHECK(vertex_integrity(g).value == 2);
    CHECK(treedepth(g).depth == 2);
}

TEST_CASE("petersen graph classics") {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i + 1, (i + 1) % 5 + 1);  // outer cycle
        g.add_edge(i + 6, (i + 2) % 5 + 6);  // inner pentagram
        g.add_edge(i + 1, i + 6);            // spokes
    }
    CHECK(vertex_cover_number(g).value == 6);
    CHECK(feedback_vertex_number(g).value == 3);
    CHECK(feedback_edge_number(g).value == 6);
}

TEST_CASE("edgeless and empty graphs") {
    Graph none(0);
    ParamReport r = compute_params(none);
    CHECK(r.vc.value == 0);
    CHECK(r.vi.value == 0);
    CHECK(r.td.depth == 0);
    Graph iso(3);
    CHECK(vertex_cover_number(iso).value == 0);
    CHECK(cluster_deletion_number(iso).value == 0);
    CHECK(vertex_integrity(iso).value == 1);
    CHECK(feedback_vertex_number(iso).value == 0);
    CHECK(treedepth(iso).depth == 1);
    CHECK(treedepth(iso).roots == std::vector<int>{1, 2, 3});
}

TEST_CASE("exact values match exhaustive search") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_graph(rng(), 7);
        CAPTURE(trial);
        CHECK(*vertex_cover_number(g).value == testref::exhaustive_min_vc(g));
        CHECK(*cluster_deletion_number(g).value == testref::exhaustive_min_cvd(g));
        CHECK(*vertex_integrity(g).value == testref::exhaustive_min_vi(g));
        CHECK(*feedback_vertex_number(g).value == testref::exhaustive_min_fvs(g));
        CHECK(treedepth(g).depth == testref::ordering_treedepth(g));
    }
}

TEST_CASE("witnesses actually achieve their values") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_graph(rng(), 8);
        CAPTURE(trial);

        ParamResult vc = vertex_cover_number(g);
        CHECK(static_cast<int>(vc.witness.size()) == *vc.value);
        CHECK(testref::covers_all_edges(g, to_mask(vc.witness)));

        ParamResult cvd = cluster_deletion_number(g);
        CHECK(static_cast<int>(cvd.witness.size()) == *cvd.value);
        CHECK(testref::is_cluster_after(g, to_mask(cvd.witness)));

        ParamResult vi = vertex_integrity(g);
        CHECK(static_cast<int>(vi.witness.size()) + max_comp_size(g, vi.witness) == *vi.value);

        ParamResult fvs = feedback_vertex_number(g);
        CHECK(static_cast<int>(fvs.witness.size()) == *fvs.value);
        CHECK(testref::is_forest_after(g, to_mask(fvs.witness)));

        FesResult fes = feedback_edge_number(g);
        int comps = static_cast<int>(connected_components(g).size());
        CHECK(fes.value == g.m() - g.n() + comps);
        Graph pruned(g.n());
        for (auto e : g.edges())
            if (std::find(fes.edges.begin(), fes.edges.end(), e) == fes.edges.end())
                pruned.add_edge(e.first, e.second);
        CHECK(testref::is_forest_after(pruned, 0));

        EliminationForest td = treedepth(g);
        CHECK(td.exact);
        CHECK(valid_elimination_forest(g, td));
    }
}

TEST_CASE("parameter hierarchy holds") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = random_graph(rng(), 9);
        int vc = *vertex_cover_number(g).value;
        int cvd = *cluster_deletion_number(g).value;
        int vi = *vertex_integrity(g).value;
        int fvs = *feedback_vertex_number(g).value;
        int fes = feedback_edge_number(g).value;
        int td = treedepth(g).depth;
        CAPTURE(trial);
        CHECK(td <= vi);
        CHECK(vi <= vc + 1);
        CHECK(cvd <= vc);
        CHECK(fvs <= vc);
        CHECK(fvs <= fes);
    }
}

TEST_CASE("size caps turn searches into unknowns") {
    Caps caps;
    caps.exact_param_n = 4;
    caps.cvd_exact_n = 4;
    caps.vi_exact_n = 4;
    caps.fvs_exact_n = 2;
    Graph g = testref::make_cycle(6);
    CHECK_FALSE(vertex_cover_number(g, caps).value.has_value());
    CHECK_FALSE(vertex_cover_number(g, caps).exact);
    CHECK_FALSE(cluster_deletion_number(g, caps).value.has_value());
    CHECK_FALSE(vertex_integrity(g, caps).value.has_value());
    CHECK_FALSE(feedback_vertex_number(g, caps).value.has_value());  // 2-core has 6 vertices
    // stripping leaves decide fvs without touching the cap
    Graph tree = testref::make_star(8);
    CHECK(feedback_vertex_number(tree, caps).value == 0);
}

TEST_CASE("search budget exhaustion is reported as unknown") {
    Caps caps;
    caps.oracle_budget = 3;
    Graph g = testref::make_complete(8);
    CHECK_FALSE(vertex_cover_number(g, caps).value.has_value());
    CHECK_FALSE(vertex_integrity(g, caps).value.has_value());
}

TEST_CASE("treedepth falls back to a valid forest beyond the cap") {
    Caps caps;
    caps.td_exact_n = 5;
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng(), 10);
        EliminationForest f = treedepth(g, caps);
        CAPTURE(trial);
        CHECK(valid_elimination_forest(g, f));
        if (g.n() > 5) {
            CHECK_FALSE(f.exact);
            CHECK(f.depth >= testref::ordering_treedepth(g));
        }
    }
}

TEST_CASE("forest validation rejects broken forests") {
    Graph g = testref::make_path(3);
    EliminationForest f = treedepth(g);
    CHECK(valid_elimination_forest(g, f));
    EliminationForest bad = f;
    bad.depth += 1;
    CHECK_FALSE(valid_elimination_forest(g, bad));
    bad = f;
    bad.parent[1] = 1;  // self-parent cycle
    CHECK_FALSE(valid_elimination_forest(g, bad));
    // a forest separating the two endpoints of an edge is rejected
    EliminationForest split;
    split.parent = {0, 0, 0, 2};
    split.roots = {1, 2};
    split.depth = 2;
    CHECK_FALSE(valid_elimination_forest(g, split));
}

TEST_CASE("reports are deterministic") {
    Graph g = random_graph(991, 9);
    ParamReport a = compute_params(g);
    ParamReport b = compute_params(g);
    CHECK(a.vc.witness == b.vc.witness);
    CHECK(a.cvd.witness == b.cvd.witness);
    CHECK(a.vi.witness == b.vi.witness);
    CHECK(a.fvs.witness == b.fvs.witness);
    CHECK(a.fes.edges == b.fes.edges);
    CHECK(a.td.parent == b.td.parent);
    CHECK(a.td.roots == b.td.roots);
}
