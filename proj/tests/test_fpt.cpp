#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <random>

#include "mndp/fpt.hpp"
#include "mndp/io.hpp"
#include "mndp/oracle.hpp"
#include "oracles.hpp"

using namespace mndp;

TEST_CASE("tau bounds follow the closed forms") {
    CHECK(tau_bound(ParamKind::Vc, 4, 7) == 12);
    CHECK(tau_bound(ParamKind::Vc, 0, 3) == 0);
    CHECK(tau_bound(ParamKind::Cvd, 2, 3) == 16);
    CHECK(tau_bound(ParamKind::Vi, 3, 2) == 27);
    CHECK(tau_bound(ParamKind::Td, 3, 2) == 16);
    CHECK(tau_bound(ParamKind::Td, 0, 5) == 5);
    CHECK(tau_bound(ParamKind::Td, 62, 1) == LLONG_MAX);
    CHECK(tau_bound(ParamKind::Td, 40, 1 << 24) == LLONG_MAX);
    CHECK_THROWS_AS(tau_bound(ParamKind::Vc, -1, 0), input_error);
    CHECK_THROWS_AS(tau_bound(ParamKind::Td, 1, -2), input_error);
}

TEST_CASE("a path with one demand folds away completely") {
    Instance inst(testref::make_path(3), {{1, 3}});
    ReductionResult red = apply_rules(inst);
    CHECK(red.reduced.g.n() == 0);
    CHECK(red.reduced.demands.empty());
    CHECK(red.credit == 1);
    REQUIRE(red.trace.steps.size() == 3);
    CHECK(red.trace.steps[0].rule == 3);
    CHECK(red.trace.steps[0].vertex == 1);
    CHECK(red.trace.steps[0].neighbor == 2);
    CHECK(red.trace.steps[1].rule == 3);
    CHECK(red.trace.steps[2].rule == 1);
    CHECK(red.trace.steps[2].vertex == 3);

    Routing lifted = expand_routing(inst, red, {});
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0].demand == 0);
    CHECK(lifted[0].path == std::vector<int>{1, 2, 3});
    CHECK(verify_routing(inst, lifted).ok);
}

TEST_CASE("four-path fold banks at the far endpoint") {
    Instance inst(testref::make_path(4), {{1, 4}});
    ReductionResult red = apply_rules(inst);
    CHECK(red.credit == 1);
    Routing lifted = expand_routing(inst, red, {});
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0].path == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("rules drop demands that share a banked vertex") {
    // both demands need vertex 1; only one survives
    Instance inst(testref::make_path(4), {{1, 3}, {1, 4}});
    ReductionResult red = apply_rules(inst);
    CHECK(red.credit == 1);
    CHECK(red.reduced.demands.empty());
    Routing lifted = expand_routing(inst, red, {});
    Verdict v = verify_routing(inst, lifted);
    CHECK(v.ok);
    CHECK(v.routed == 1);
}

TEST_CASE("reduction keeps cycles untouched") {
    Instance inst(testref::make_cycle(5), {{1, 3}});
    ReductionResult red = apply_rules(inst);
    CHECK(red.trace.steps.empty());
    CHECK(red.credit == 0);
    CHECK(red.reduced.g == inst.g);
    CHECK(red.reduced.demands == inst.demands);
    CHECK(red.vertex_map == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("reduction output has no degree-one vertices and no self-demands") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        Instance inst = testref::random_test_instance(rng(), 9, 12, 5);
        ReductionResult red = apply_rules(inst);
        CAPTURE(trial);
        for (int v = 1; v <= red.reduced.g.n(); ++v) CHECK(red.reduced.g.degree(v) >= 2);
        for (const Demand& d : red.reduced.demands) CHECK(d.a != d.b);
        CHECK(static_cast<int>(red.demand_map.size()) == red.reduced.k());
    }
}

TEST_CASE("optimum is preserved by the rules plus credit") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 120; ++trial) {
        Instance inst = testref::random_test_instance(rng(), 8, 12, 5);
        ReductionResult red = apply_rules(inst);
        OracleResult orig = brute_force_opt(inst);
        OracleResult reduced = brute_force_opt(red.reduced);
        REQUIRE(orig.opt.has_value());
        REQUIRE(reduced.opt.has_value());
        CAPTURE(trial);
        CHECK(*orig.opt == *reduced.opt + red.credit);

        Routing lifted = expand_routing(inst, red, reduced.routing);
        Verdict v = verify_routing(inst, lifted);
        CHECK(v.ok);
        CHECK(v.routed == *orig.opt);
    }
}

TEST_CASE("expanding an invalid reduced routing is rejected") {
    Instance inst(testref::make_cycle(4), {{1, 3}});
    ReductionResult red = apply_rules(inst);
    Routing bogus{{0, {1, 3}}};  // 1-3 is not an edge of the cycle
    CHECK_THROWS_AS(expand_routing(inst, red, bogus), input_error);
}

TEST_CASE("solver handles bare cycles") {
    // antipodal demands on a six-cycle pairwise conflict
    Instance crossing(testref::make_cycle(6), {{1, 4}, {2, 5}, {3, 6}});
    FesSolveResult res = solve_fes(crossing);
    CHECK(res.opt == 1);
    CHECK(verify_routing(crossing, res.routing).routed == 1);

    Instance disjoint(testref::make_cycle(6), {{1, 2}, {4, 5}});
    CHECK(solve_fes(disjoint).opt == 2);

    Instance empty_cycle(testref::make_cycle(5), {});
    CHECK(solve_fes(empty_cycle).opt == 0);
}

TEST_CASE("solver handles self-demands and empty instances") {
    Instance self(testref::make_path(3), {{2, 2}});
    FesSolveResult res = solve_fes(self);
    CHECK(res.opt == 1);
    REQUIRE(res.routing.size() == 1);
    CHECK(res.routing[0].path == std::vector<int>{2});

    Instance nothing{Graph(0), {}};
    CHECK(solve_fes(nothing).opt == 0);
    CHECK(solve_fes(nothing).routing.empty());
}

TEST_CASE("solver branches through dense spots") {
    // two triangles sharing vertex 3: a degree-four branching vertex
    Graph g(5);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    Instance inst(g, {{1, 2}, {4, 5}});
    FesSolveResult res = solve_fes(inst);
    CHECK(res.opt == 2);
    CHECK(res.nodes > 1);
}

TEST_CASE("solver matches the oracle") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 150; ++trial) {
        Instance inst = testref::random_test_instance(rng(), 8, 12, 5);
        OracleResult oracle = brute_force_opt(inst);
        REQUIRE(oracle.opt.has_value());
        FesSolveResult res = solve_fes(inst);
        CAPTURE(trial);
        CHECK(res.opt == *oracle.opt);
        Verdict v = verify_routing(inst, res.routing);
        CHECK(v.ok);
        CHECK(v.routed == res.opt);
    }
}

TEST_CASE("solver matches the oracle on denser graphs") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 60; ++trial) {
        Instance inst = testref::random_test_instance(rng(), 7, 14, 4);
        OracleResult oracle = brute_force_opt(inst);
        REQUIRE(oracle.opt.has_value());
        CAPTURE(trial);
        CHECK(solve_fes(inst).opt == *oracle.opt);
    }
}

TEST_CASE("solver is deterministic") {
    Instance inst = testref::random_test_instance(211, 8, 12, 5);
    FesSolveResult a = solve_fes(inst);
    FesSolveResult b = solve_fes(inst);
    CHECK(a.opt == b.opt);
    CHECK(a.nodes == b.nodes);
    CHECK(serialize_routing(a.routing) == serialize_routing(b.routing));
}

TEST_CASE("solver respects the search budget") {
    Caps caps;
    caps.oracle_budget = 2;
    Instance inst(testref::make_complete(4), {{1, 2}});
    CHECK_THROWS_AS(solve_fes(inst, caps), resource_limit_error);
}
