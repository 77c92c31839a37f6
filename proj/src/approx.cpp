#include "mndp/approx.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "mndp/color_coding.hpp"
#include "mndp/fpt.hpp"
#include "mndp/oracle.hpp"
#include "mndp/structural.hpp"

namespace mndp {

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw input_error("approximation: eps must lie strictly between 0 and 1");
}

// ceil(x) clamped into [1, k + 1]; thresholds beyond k + 1 behave identically
int clamp_ell(long double x, int k) {
    if (x >= static_cast<long double>(k) + 1) return k + 1;
    int v = static_cast<int>(std::ceil(x - 1e-12L));
    return std::max(1, v);
}

int clamp_tau(long long bound, int n) {
    return static_cast<int>(std::min<long long>(bound, n));
}

void check_result(const Instance& inst, const ApproxResult& res, const char* who) {
    Verdict v = verify_routing(inst, res.routing);
    if (!v.ok || v.routed != res.value)
        throw std::logic_error(std::string(who) + ": internal routing check failed: " +
                               v.violation);
}

SolveOptions bounded_options(const Caps& caps) {
    SolveOptions opts;
    opts.mode = SweepMode::Derandomized;
    opts.caps = caps;
    return opts;
}

}  // namespace

ApproxResult approx_cvd(const Instance& inst, double eps, const Caps& caps) {
    check_eps(eps);
    ParamResult cvd = cluster_deletion_number(inst.g, caps);
    if (!cvd.value.has_value())
        throw resource_limit_error("cluster deletion number is out of reach for this graph");
    ApproxResult res;
    res.epsilon = eps;
    res.param = *cvd.value;

    ClusterRouteResult cluster = cluster_route_opt(inst, cvd.witness);
    if (res.param == 0) {  // the graph is already a cluster graph: exact
        res.value = cluster.value;
        res.routing = std::move(cluster.routing);
        res.ell_star = 0;
        res.branch = "cluster";
        check_result(inst, res, "approx_cvd");
        return res;
    }

    res.ell_star = clamp_ell(static_cast<long double>(res.param) / eps, inst.k());
    int tau = clamp_tau(tau_bound(ParamKind::Cvd, res.param, res.ell_star), inst.g.n());
    SolveResult bounded = solve_with_tau(inst, res.ell_star, tau, bounded_options(caps));

    if (bounded.best > cluster.value) {
        res.value = bounded.best;
        res.routing = std::move(bounded.routing);
        res.branch = "bounded";
    } else {
        res.value = cluster.value;
        res.routing = std::move(cluster.routing);
        res.branch = "cluster";
    }
    check_result(inst, res, "approx_cvd");
    return res;
}

ApproxResult approx_vi(const Instance& inst, double eps, const Caps& caps) {
    check_eps(eps);
    ParamResult vi = vertex_integrity(inst.g, caps);
    if (!vi.value.has_value())
        throw resource_limit_error("vertex integrity is out of reach for this graph");
    ApproxResult res;
    res.epsilon = eps;
    res.param = *vi.value;
    if (inst.g.n() == 0) {
        res.branch = "component";
        return res;
    }

    // exact solve of every component once the deletion set is gone
    std::vector<char> alive(inst.g.n() + 1, 1);
    for (int v : vi.witness) alive[v] = 0;
    int component_value = 0;
    Routing component_routing;
    for (const auto& comp : connected_components(inst.g, alive)) {
        SubInstance sub = induced_instance(inst, comp);
        if (sub.inst.k() == 0) continue;
        SolveResult exact = solve_with_tau(sub.inst, sub.inst.k() + 1, sub.inst.g.n(),
                                           bounded_options(caps));
        component_value += exact.best;
        for (RoutingEntry& e : lift_routing(sub, exact.routing))
            component_routing.push_back(std::move(e));
    }

    res.ell_star = clamp_ell(static_cast<long double>(res.param) / eps, inst.k());
    int tau = clamp_tau(tau_bound(ParamKind::Vi, res.param, res.ell_star), inst.g.n());
    SolveResult bounded = solve_with_tau(inst, res.ell_star, tau, bounded_options(caps));

    if (bounded.best > component_value) {
        res.value = bounded.best;
        res.routing = std::move(bounded.routing);
        res.branch = "bounded";
    } else {
        res.value = component_value;
        res.routing = std::move(component_routing);
        res.branch = "component";
    }
    check_result(inst, res, "approx_vi");
    return res;
}

ApproxResult approx_td(const Instance& inst, double eps, const Caps& caps) {
    check_eps(eps);
    EliminationForest forest = treedepth(inst.g, caps);
    ApproxResult res;
    res.epsilon = eps;
    res.param = forest.depth;
    res.ell_star = clamp_ell((2.0L - eps) / eps, inst.k());

    std::vector<int> depth(inst.g.n() + 1, 0);
    std::function<int(int)> depth_of = [&](int v) {
        if (depth[v] > 0) return depth[v];
        return depth[v] = forest.parent[v] == 0 ? 1 : depth_of(forest.parent[v]) + 1;
    };
    for (int v = 1; v <= inst.g.n(); ++v) depth_of(v);

    int bounded_wins = 0, split_wins = 0;

    // value + routing for a connected vertex set at accuracy e
    std::function<std::pair<int, Routing>(const std::vector<int>&, double)> rec =
        [&](const std::vector<int>& verts, double e) -> std::pair<int, Routing> {
        SubInstance sub = induced_instance(inst, verts);
        if (sub.inst.g.m() == 0) {
            // only self-demands are routable on an edgeless piece
            Routing r;
            std::vector<char> used(sub.inst.g.n() + 1, 0);
            for (int d = 0; d < sub.inst.k(); ++d) {
                const Demand& dem = sub.inst.demands[d];
                if (dem.a == dem.b && !used[dem.a]) {
                    used[dem.a] = 1;
                    r.push_back({d, {dem.a}});
                }
            }
            int v = static_cast<int>(r.size());
            return {v, lift_routing(sub, r)};
        }

        // the unique shallowest vertex roots this connected piece
        int root = verts.front();
        int height = 0;
        for (int v : verts) {
            if (depth[v] < depth[root]) root = v;
            height = std::max(height, depth[v]);
        }
        height -= depth[root] - 1;

        int ell = clamp_ell((2.0L - e) / e, sub.inst.k());
        int tau = clamp_tau(tau_bound(ParamKind::Td, std::min(height, 62), ell),
                            sub.inst.g.n());
        SolveResult bounded = solve_with_tau(sub.inst, ell, tau, bounded_options(caps));

        int split_value = 0;
        Routing split_routing;
        std::vector<char> alive(inst.g.n() + 1, 0);
        for (int v : verts) alive[v] = 1;
        alive[root] = 0;
        for (const auto& piece : connected_components(inst.g, alive)) {
            auto [pv, pr] = rec(piece, e / 2);
            split_value += pv;
            for (RoutingEntry& entry : pr) split_routing.push_back(std::move(entry));
        }

        if (bounded.best >= split_value) {
            ++bounded_wins;
            return {bounded.best, lift_routing(sub, bounded.routing)};
        }
        ++split_wins;
        return {split_value, std::move(split_routing)};
    };

    for (const auto& comp : connected_components(inst.g)) {
        auto [v, r] = rec(comp, eps);
        res.value += v;
        for (RoutingEntry& entry : r) res.routing.push_back(std::move(entry));
    }
    res.branch = "bounded=" + std::to_string(bounded_wins) +
                 ",split=" + std::to_string(split_wins);
    check_result(inst, res, "approx_td");
    return res;
}

}  // namespace mndp
