#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mndp/instance.hpp"
#include "mndp/io.hpp"
#include "mndp/oracle.hpp"
#include "oracles.hpp"

using namespace mndp;

TEST_CASE("verify accepts a straight path") {
    Instance inst(testref::make_path(3), {{1, 3}});
    Verdict v = verify_routing(inst, {{0, {1, 2, 3}}});
    CHECK(v.ok);
    CHECK(v.routed == 1);
    CHECK(verify_routing(inst, {{0, {3, 2, 1}}}).ok);  // either orientation
}

TEST_CASE("empty routing is valid with zero routed") {
    Instance inst(testref::make_path(3), {{1, 3}});
    Verdict v = verify_routing(inst, {});
    CHECK(v.ok);
    CHECK(v.routed == 0);
}

TEST_CASE("verify rejects structural violations") {
    Graph g = testref::make_complete(4);
    Instance inst(g, {{1, 2}, {1, 3}, {2, 4}});
    CHECK_FALSE(verify_routing(inst, {{0, {1, 2}}, {1, {1, 3}}}).ok);  // shared vertex 1
    CHECK_FALSE(verify_routing(inst, {{0, {1}}}).ok);                  // single vertex, a != b
    CHECK_FALSE(verify_routing(inst, {{0, {1, 3}}}).ok);               // wrong endpoints
    CHECK_FALSE(verify_routing(inst, {{0, {1, 2}}, {0, {1, 2}}}).ok);  // demand twice
    CHECK_FALSE(verify_routing(inst, {{0, {}}}).ok);                   // empty path
    Instance sparse(testref::make_path(4), {{1, 4}});
    CHECK_FALSE(verify_routing(sparse, {{0, {1, 3, 4}}}).ok);  // 1,3 not adjacent
    CHECK(verify_routing(sparse, {{0, {1, 2, 3, 4}}}).ok);
}

TEST_CASE("verify reports which demand violated") {
    Instance inst(testref::make_path(3), {{1, 3}, {1, 2}});
    Verdict v = verify_routing(inst, {{0, {1, 2, 3}}, {1, {1, 2}}});
    CHECK_FALSE(v.ok);
    CHECK(v.violation.find("demand 2") != std::string::npos);
}

TEST_CASE("single-vertex path only for internal self-demands") {
    Instance inst(testref::make_path(3), {{2, 2}});
    CHECK(verify_routing(inst, {{0, {2}}}).ok);
    CHECK_FALSE(verify_routing(inst, {{0, {1}}}).ok);
}

TEST_CASE("malformed ids throw instead of returning a verdict") {
    Instance inst(testref::make_path(3), {{1, 3}});
    CHECK_THROWS_AS(verify_routing(inst, {{0, {1, 7, 3}}}), input_error);
    CHECK_THROWS_AS(verify_routing(inst, {{3, {1, 2, 3}}}), input_error);
    CHECK_THROWS_AS(verify_routing(inst, {{-1, {1, 2, 3}}}), input_error);
}

TEST_CASE("verify is total on arbitrary in-range entries") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Instance inst = testref::random_test_instance(rng(), 7, 12, 4);
        Routing r;
        int entries = static_cast<int>(rng() % 5);
        for (int i = 0; i < entries; ++i) {
            RoutingEntry e;
            e.demand = static_cast<int>(rng() % inst.k());
            int len = static_cast<int>(rng() % 5);
            for (int j = 0; j < len; ++j)
                e.path.push_back(1 + static_cast<int>(rng() % inst.g.n()));
            r.push_back(e);
        }
        CHECK_NOTHROW(verify_routing(inst, r));
    }
}

TEST_CASE("disjointness is hereditary under vertex deletion") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Instance inst = testref::random_test_instance(rng(), 7, 12, 4);
        OracleResult res = brute_force_opt(inst);
        REQUIRE(res.opt.has_value());
        if (res.routing.size() < 2) continue;
        REQUIRE(verify_routing(inst, res.routing).ok);
        for (std::size_t keep = 0; keep < res.routing.size(); ++keep) {
            // delete every vertex used by the other entries, re-verify the rest
            std::vector<int> survivors;
            std::vector<char> gone(inst.g.n() + 1, 0);
            for (std::size_t other = 0; other < res.routing.size(); ++other)
                if (other != keep)
                    for (int v : res.routing[other].path) gone[v] = 1;
            for (int v = 1; v <= inst.g.n(); ++v)
                if (!gone[v]) survivors.push_back(v);
            SubInstance sub = induced_instance(inst, survivors);
            std::vector<int> to_new(inst.g.n() + 1, 0);
            for (std::size_t i = 1; i < sub.vertex_map.size(); ++i)
                to_new[sub.vertex_map[i]] = static_cast<int>(i);
            RoutingEntry mapped;
            auto orig_demand = res.routing[keep].demand;
            mapped.demand = static_cast<int>(
                std::find(sub.demand_map.begin(), sub.demand_map.end(), orig_demand) -
                sub.demand_map.begin());
            REQUIRE(mapped.demand < static_cast<int>(sub.demand_map.size()));
            for (int v : res.routing[keep].path) mapped.path.push_back(to_new[v]);
            CHECK(verify_routing(sub.inst, {mapped}).ok);
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("parse and serialize round-trip") {
    std::string text =
        "p mndp 3 2 1\n"
        "e 1 2\n"
        "e 2 3\n"
        "d 1 3\n";
    Instance inst = parse_instance(text);
    CHECK(inst.g.n() == 3);
    CHECK(inst.g.m() == 2);
    CHECK(inst.k() == 1);
    CHECK_FALSE(inst.target.has_value());
    CHECK(serialize_instance(inst) == text);
    CHECK(parse_instance(serialize_instance(inst)) == inst);
}

TEST_CASE("parse normalizes comments, spacing and edge orientation") {
    std::string messy =
        "# a comment\n"
        "p mndp 3 2 1\n"
        "\n"
        "e 2   1  # inline comment\n"
        "e 2 3\n"
        "l 1\n"
        "d 3 1\n";
    Instance inst = parse_instance(messy);
    CHECK(inst.target == 1);
    CHECK(inst.g.edges()[0] == std::pair{1, 2});
    CHECK(inst.demands[0] == Demand{3, 1});  // demand orientation preserved
    std::string canon =
        "p mndp 3 2 1\n"
        "l 1\n"
        "e 1 2\n"
        "e 2 3\n"
        "d 3 1\n";
    CHECK(serialize_instance(inst) == canon);
    CHECK(parse_instance(canon) == inst);
}

TEST_CASE("labels survive the round-trip") {
    std::string text =
        "p mndp 2 1 0\n"
        "label 1 C1.v2\n"
        "label 2 C1.u3\n"
        "e 1 2\n";
    Instance inst = parse_instance(text);
    CHECK(inst.g.label(1) == "C1.v2");
    CHECK(inst.g.label(2) == "C1.u3");
    CHECK(serialize_instance(inst) == text);
}

static std::string error_of(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const input_error& e) {
        return e.what();
    }
    return "";
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_of("p mndp 2 1 0\ne 1 1\n").find("line 2") != std::string::npos);  // self-loop
    CHECK(error_of("p mndp 3 2 0\ne 1 2\ne 2 1\n").find("line 3") != std::string::npos);  // dup
    CHECK(error_of("p mndp 3 0 1\nd 2 2\n").find("line 2") != std::string::npos);  // equal d
    CHECK(error_of("p mndp 3 0 1\nd 2 9\n").find("line 2") != std::string::npos);  // range
    CHECK(error_of("q mndp 1 0 0\n").find("line 1") != std::string::npos);
    CHECK(error_of("p mndp 2 0 0\nx 1\n").find("line 2") != std::string::npos);
    CHECK(error_of("p mndp 2 0 0\nlabel 5 x\n").find("line 2") != std::string::npos);
}

TEST_CASE("parse rejects count mismatches and bad targets") {
    CHECK_THROWS_AS(parse_instance("p mndp 2 1 0\n"), input_error);            // missing edge
    CHECK_THROWS_AS(parse_instance("p mndp 2 0 1\n"), input_error);            // missing demand
    CHECK_THROWS_AS(parse_instance("p mndp 2 0 0\nl 1\n"), input_error);       // l > k
    CHECK_THROWS_AS(parse_instance(""), input_error);                          // no header
    CHECK_THROWS_AS(parse_instance("p mndp 1 0 0\np mndp 1 0 0\n"), input_error);
}

TEST_CASE("routing files round-trip with 1-based demand indices") {
    Routing r{{0, {1, 2, 3}}, {2, {5, 4}}};
    std::string text = serialize_routing(r);
    CHECK(text == "r 1 1 2 3\nr 3 5 4\n");
    CHECK(parse_routing(text) == r);
    CHECK_THROWS_AS(parse_routing("r 0 1 2\n"), input_error);   // 0 is not a valid index
    CHECK_THROWS_AS(parse_routing("r 1\n"), input_error);       // missing path
    CHECK_THROWS_AS(parse_routing("x 1 2 3\n"), input_error);
}

TEST_CASE("witness files parse all parameter shapes") {
    WitnessFile wf = parse_witness(
        "w vc 2 5\n"
        "w fes 1,2 4,3\n"
        "w td 0 1 1\n");
    CHECK(wf.vertex_sets.at("vc") == std::vector<int>{2, 5});
    CHECK(wf.fes_edges == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    CHECK(wf.td_parents == std::vector<int>{0, 1, 1});
    CHECK(wf.has("vc"));
    CHECK_FALSE(wf.has("cvd"));
    CHECK_THROWS_AS(parse_witness("w banana 1\n"), input_error);
    CHECK_THROWS_AS(parse_witness("w fes 12\n"), input_error);
}

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(2, 1);
    CHECK(g.has_edge(1, 2));
    CHECK(g.edges()[0] == std::pair{1, 2});
    CHECK_THROWS_AS(g.add_edge(1, 2), input_error);
    CHECK_THROWS_AS(g.add_edge(3, 3), input_error);
    CHECK_THROWS_AS(g.add_edge(0, 1), input_error);
    CHECK_THROWS_AS(g.add_edge(1, 5), input_error);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("components and induced subgraphs") {
    Graph g(5);
    g.add_edge(1, 2);
    g.add_edge(4, 5);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(comps[2] == std::vector<int>{4, 5});
    auto [h, map] = induced_subgraph(g, {1, 2, 4});
    CHECK(h.n() == 3);
    CHECK(h.m() == 1);
    CHECK(map[3] == 4);
}

TEST_CASE("shortest_path is lexicographically smallest among shortest") {
    // two shortest routes 1-2-4 and 1-3-4; lex picks 1-2-4
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    std::vector<char> all(5, 1);
    CHECK(shortest_path(g, 1, 4, all) == std::vector<int>{1, 2, 4});
    all[2] = 0;
    CHECK(shortest_path(g, 1, 4, all) == std::vector<int>{1, 3, 4});
    CHECK(shortest_path(g, 1, 1, all) == std::vector<int>{1});
    all[3] = 0;
    CHECK(shortest_path(g, 1, 4, all).empty());
}
