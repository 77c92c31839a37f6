#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mndp/approx.hpp"
#include "mndp/io.hpp"
#include "mndp/oracle.hpp"
#include "oracles.hpp"

using namespace mndp;

namespace {

// ceil((1 - eps) * opt) for eps = num/den, in exact integer arithmetic
int floor_guarantee(int opt, int num, int den) {
    return ((den - num) * opt + den - 1) / den;
}

using Scheme = ApproxResult (*)(const Instance&, double, const Caps&);

void check_scheme(Scheme scheme, const char* name, double eps, int num, int den,
                  std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        Instance inst = testref::random_test_instance(rng(), 8, 13, 5);
        OracleResult oracle = brute_force_opt(inst);
        REQUIRE(oracle.opt.has_value());
        ApproxResult res = scheme(inst, eps, default_caps());
        CAPTURE(name);
        CAPTURE(trial);
        CAPTURE(eps);
        CHECK(res.value >= floor_guarantee(*oracle.opt, num, den));
        CHECK(res.value <= *oracle.opt);
        Verdict v = verify_routing(inst, res.routing);
        CHECK(v.ok);
        CHECK(v.routed == res.value);
        // below the exact-search threshold the schemes must be exact
        if (*oracle.opt <= res.ell_star) CHECK(res.value == *oracle.opt);
    }
}

}  // namespace

TEST_CASE("cvd scheme meets its guarantee") {
    check_scheme(&approx_cvd, "cvd", 0.5, 1, 2, 301, 40);
    check_scheme(&approx_cvd, "cvd", 0.25, 1, 4, 302, 40);
}

TEST_CASE("vi scheme meets its guarantee") {
    check_scheme(&approx_vi, "vi", 0.5, 1, 2, 303, 40);
    check_scheme(&approx_vi, "vi", 0.25, 1, 4, 304, 40);
}

TEST_CASE("td scheme meets its guarantee") {
    check_scheme(&approx_td, "td", 0.5, 1, 2, 305, 40);
    check_scheme(&approx_td, "td", 0.25, 1, 4, 306, 40);
}

TEST_CASE("cluster graphs are solved exactly with a zero parameter") {
    Graph g(6);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(4, 6);
    Instance inst(g, {{1, 2}, {4, 6}, {1, 3}});
    ApproxResult res = approx_cvd(inst, 0.5);
    CHECK(res.param == 0);
    CHECK(res.branch == "cluster");
    CHECK(res.value == 2);
}

TEST_CASE("star instances pass through the bounded search") {
    Instance inst(testref::make_star(5), {{2, 3}, {4, 5}, {6, 2}});
    OracleResult oracle = brute_force_opt(inst);
    REQUIRE(*oracle.opt == 1);
    for (double eps : {0.5, 0.25}) {
        CHECK(approx_cvd(inst, eps).value == 1);
        CHECK(approx_vi(inst, eps).value == 1);
        CHECK(approx_td(inst, eps).value == 1);
    }
}

TEST_CASE("td recursion handles edgeless pieces and self-demands") {
    Instance inst{Graph(3), {{1, 1}, {2, 2}, {1, 1}}};
    ApproxResult res = approx_td(inst, 0.5);
    CHECK(res.value == 2);
    CHECK(verify_routing(inst, res.routing).ok);
}

TEST_CASE("epsilon is validated") {
    Instance inst(testref::make_path(3), {{1, 3}});
    for (double bad : {0.0, 1.0, -0.5, 2.0}) {
        CHECK_THROWS_AS(approx_cvd(inst, bad), input_error);
        CHECK_THROWS_AS(approx_vi(inst, bad), input_error);
        CHECK_THROWS_AS(approx_td(inst, bad), input_error);
    }
}

TEST_CASE("unavailable parameters surface as resource errors") {
    Caps caps;
    caps.cvd_exact_n = 3;
    caps.vi_exact_n = 3;
    Instance inst(testref::make_cycle(6), {{1, 4}});
    CHECK_THROWS_AS(approx_cvd(inst, 0.5, caps), resource_limit_error);
    CHECK_THROWS_AS(approx_vi(inst, 0.5, caps), resource_limit_error);
}

TEST_CASE("td scheme survives the heuristic forest fallback") {
    Caps caps;
    caps.td_exact_n = 3;
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 15; ++trial) {
        Instance inst = testref::random_test_instance(rng(), 8, 13, 4);
        OracleResult oracle = brute_force_opt(inst);
        ApproxResult res = approx_td(inst, 0.5, caps);
        CAPTURE(trial);
        CHECK(res.value >= floor_guarantee(*oracle.opt, 1, 2));
        CHECK(verify_routing(inst, res.routing).ok);
    }
}

TEST_CASE("approximations are deterministic") {
    Instance inst = testref::random_test_instance(411, 8, 13, 5);
    for (Scheme scheme : {&approx_cvd, &approx_vi, &approx_td}) {
        ApproxResult a = scheme(inst, 0.25, default_caps());
        ApproxResult b = scheme(inst, 0.25, default_caps());
        CHECK(a.value == b.value);
        CHECK(a.branch == b.branch);
        CHECK(serialize_routing(a.routing) == serialize_routing(b.routing));
    }
}
