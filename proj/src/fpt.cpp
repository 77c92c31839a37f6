#include "mndp/fpt.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <stdexcept>
#include <utility>

#include "mndp/graph.hpp"

namespace mndp {

long long tau_bound(ParamKind kind, int param, int ell) {
    if (param < 0 || ell < 0) throw input_error("tau_bound: negative arguments");
    long long p = param, l = ell;
    switch (kind) {
        case ParamKind::Vc:
            return 3 * p;
        case ParamKind::Cvd:
            return 5 * p + 2 * l;
        case ParamKind::Vi:
            return 2 * p * p + p + p * l;
        case ParamKind::Td:
            if (p >= 62) return LLONG_MAX;
            if (l != 0 && (1LL << p) > LLONG_MAX / l) return LLONG_MAX;
            return (1LL << p) * l;
    }
    throw input_error("tau_bound: unknown parameter kind");
}

namespace {

// Trace event: a reduction step, or (rule 4, solver-internal) a demand
// routed along a cycle arc with the explicit path oriented a -> b.
struct Ev {
    ReductionStep step;
    std::vector<int> path;
};

// Mutable solver state in original vertex/demand ids; vertices and edges
// die by mask so the trace can be replayed without translation.
struct State {
    std::vector<char> v_alive;  // n + 1
    std::vector<char> e_alive;  // m
    std::vector<Demand> dem;    // current endpoints
    std::vector<char> live;     // k
    std::vector<Ev> events;
    int value = 0;  // demands banked or routed so far
};

struct Ctx {
    const Instance& inst;
    // vertex -> (edge index, other endpoint)
    std::vector<std::vector<std::pair<int, int>>> inc;
    std::int64_t budget = 0;
    std::int64_t nodes = 0;
    State best;
    bool have_best = false;
};

Ctx make_ctx(const Instance& inst) {
    Ctx ctx{inst, {}, 0, 0, {}, false};
    ctx.inc.resize(inst.g.n() + 1);
    const auto& edges = inst.g.edges();
    for (int e = 0; e < inst.g.m(); ++e) {
        ctx.inc[edges[e].first].push_back({e, edges[e].second});
        ctx.inc[edges[e].second].push_back({e, edges[e].first});
    }
    return ctx;
}

State make_root(const Instance& inst) {
    State s;
    s.v_alive.assign(inst.g.n() + 1, 1);
    s.e_alive.assign(inst.g.m(), 1);
    s.dem = inst.demands;
    s.live.assign(inst.demands.size(), 1);
    return s;
}

int degree(const Ctx& ctx, const State& s, int v) {
    int d = 0;
    for (auto [e, w] : ctx.inc[v]) d += s.e_alive[e];
    return d;
}

// kill v and its incident edges; stranded live demands go to `dropped`
void delete_vertex(const Ctx& ctx, State& s, int v, std::vector<int>* dropped) {
    s.v_alive[v] = 0;
    for (auto [e, w] : ctx.inc[v]) s.e_alive[e] = 0;
    for (std::size_t d = 0; d < s.dem.size(); ++d)
        if (s.live[d] && s.dem[d].touches(v)) {
            s.live[d] = 0;
            if (dropped) dropped->push_back(static_cast<int>(d));
        }
}

void run_rules(const Ctx& ctx, State& s) {
    int n = ctx.inst.g.n();
    for (;;) {
        // rule 1: bank the first live self-demand
        int d1 = -1;
        for (std::size_t d = 0; d < s.dem.size(); ++d)
            if (s.live[d] && s.dem[d].a == s.dem[d].b) {
                d1 = static_cast<int>(d);
                break;
            }
        if (d1 >= 0) {
            int u = s.dem[d1].a;
            Ev ev;
            ev.step.rule = 1;
            ev.step.vertex = u;
            ev.step.banked_demand = d1;
            s.live[d1] = 0;
            ++s.value;
            delete_vertex(ctx, s, u, &ev.step.dropped);
            s.events.push_back(std::move(ev));
            continue;
        }
        // rules 2 and 3: smallest isolated / degree-one vertex
        int u2 = -1, u3 = -1;
        for (int v = 1; v <= n && u2 < 0; ++v) {
            if (!s.v_alive[v]) continue;
            int d = degree(ctx, s, v);
            if (d == 0)
                u2 = v;
            else if (d == 1 && u3 < 0)
                u3 = v;
        }
        if (u2 >= 0) {
            Ev ev;
            ev.step.rule = 2;
            ev.step.vertex = u2;
            delete_vertex(ctx, s, u2, &ev.step.dropped);
            s.events.push_back(std::move(ev));
            continue;
        }
        if (u3 >= 0) {
            int v = 0;
            for (auto [e, w] : ctx.inc[u3])
                if (s.e_alive[e]) v = w;
            Ev ev;
            ev.step.rule = 3;
            ev.step.vertex = u3;
            ev.step.neighbor = v;
            for (std::size_t d = 0; d < s.dem.size(); ++d) {
                if (!s.live[d]) continue;
                if (s.dem[d].a == u3) {
                    ev.step.rewrites.push_back({static_cast<int>(d), 0, u3, v});
                    s.dem[d].a = v;
                }
                if (s.dem[d].b == u3) {
                    ev.step.rewrites.push_back({static_cast<int>(d), 1, u3, v});
                    s.dem[d].b = v;
                }
            }
            delete_vertex(ctx, s, u3, nullptr);  // no live demand touches u3 now
            s.events.push_back(std::move(ev));
            continue;
        }
        return;
    }
}

// Replays events backwards, materializing banked routes and undoing the
// endpoint folds. `current` holds routing entries in solver coordinates,
// each path oriented first-endpoint -> second-endpoint.
Routing replay(const Instance& original, const std::vector<Ev>& events, Routing current) {
    for (auto it = events.rbegin(); it != events.rend(); ++it) {
        const Ev& ev = *it;
        if (ev.step.rule == 4)
            current.push_back({ev.step.banked_demand, ev.path});
        else if (ev.step.rule == 1)
            current.push_back({ev.step.banked_demand, {ev.step.vertex}});
        else if (ev.step.rule == 3)
            for (const auto& rw : ev.step.rewrites)
                for (auto& entry : current)
                    if (entry.demand == rw.demand) {
                        if (rw.slot == 0)
                            entry.path.insert(entry.path.begin(), rw.from);
                        else
                            entry.path.push_back(rw.from);
                    }
    }
    (void)original;
    return current;
}

// first alive component as a sorted vertex list, or empty
std::vector<int> first_component(const Ctx& ctx, const State& s) {
    int n = ctx.inst.g.n();
    int start = 0;
    for (int v = 1; v <= n; ++v)
        if (s.v_alive[v]) {
            start = v;
            break;
        }
    if (start == 0) return {};
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{start}, comp;
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (auto [e, w] : ctx.inc[v])
            if (s.e_alive[e] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

// the two arcs of a cycle between a and b, oriented a -> b, each including
// both endpoints; deterministic by smaller first neighbor
std::array<std::vector<int>, 2> cycle_arcs(const Ctx& ctx, const State& s, int a, int b) {
    std::array<int, 2> nexts{};
    int found = 0;
    for (auto [e, w] : ctx.inc[a])
        if (s.e_alive[e]) nexts[found++] = w;
    std::sort(nexts.begin(), nexts.end());
    std::array<std::vector<int>, 2> arcs;
    for (int side = 0; side < 2; ++side) {
        std::vector<int> path{a};
        int prev = a, cur = nexts[side];
        while (true) {
            path.push_back(cur);
            if (cur == b) break;
            int next = -1;
            for (auto [e, w] : ctx.inc[cur])
                if (s.e_alive[e] && w != prev) next = w;
            prev = cur;
            cur = next;
        }
        arcs[side] = std::move(path);
    }
    return arcs;
}

void solve_rec(Ctx& ctx, State s) {
    if (--ctx.budget < 0)
        throw resource_limit_error("feedback-edge solver exceeded its search budget");
    ++ctx.nodes;
    run_rules(ctx, s);

    std::vector<int> comp = first_component(ctx, s);
    if (comp.empty()) {
        if (!ctx.have_best || s.value > ctx.best.value) {
            ctx.best = std::move(s);
            ctx.have_best = true;
        }
        return;
    }
    int live_left = 0;
    for (std::size_t d = 0; d < s.dem.size(); ++d) live_left += s.live[d];
    if (ctx.have_best && s.value + live_left <= ctx.best.value) return;

    bool cycle = true;
    int branch_v = 0;
    for (int v : comp)
        if (degree(ctx, s, v) >= 3) {
            cycle = false;
            branch_v = v;
            break;
        }

    if (!cycle) {
        std::vector<int> picked;
        for (auto [e, w] : ctx.inc[branch_v])
            if (s.e_alive[e]) picked.push_back(e);
        std::sort(picked.begin(), picked.end());
        // a path visiting branch_v uses at most two incident edges, so any
        // three of them cover every solution with an unused edge
        for (int i = 0; i < 3; ++i) {
            State t = s;
            t.e_alive[picked[i]] = 0;
            solve_rec(ctx, std::move(t));
        }
        return;
    }

    std::vector<char> in_comp(ctx.inst.g.n() + 1, 0);
    for (int v : comp) in_comp[v] = 1;
    bool any_internal = false;
    for (std::size_t d = 0; d < s.dem.size(); ++d) {
        if (!s.live[d] || !in_comp[s.dem[d].a] || !in_comp[s.dem[d].b]) continue;
        any_internal = true;
        for (auto& arc : cycle_arcs(ctx, s, s.dem[d].a, s.dem[d].b)) {
            State t = s;
            Ev ev;
            ev.step.rule = 4;
            ev.step.banked_demand = static_cast<int>(d);
            ev.path = arc;
            t.live[d] = 0;
            ++t.value;
            t.events.push_back(std::move(ev));
            for (int v : arc) delete_vertex(ctx, t, v, nullptr);
            solve_rec(ctx, std::move(t));
        }
    }
    if (!any_internal) {
        // nothing routable here: discard the component
        State t = std::move(s);
        for (int v : comp) delete_vertex(ctx, t, v, nullptr);
        solve_rec(ctx, std::move(t));
    }
}

}  // namespace

ReductionResult apply_rules(const Instance& inst) {
    Ctx ctx = make_ctx(inst);
    State s = make_root(inst);
    run_rules(ctx, s);

    int n = inst.g.n();
    std::vector<int> old_to_new(n + 1, 0);
    ReductionResult res;
    for (int v = 1; v <= n; ++v)
        if (s.v_alive[v]) {
            res.vertex_map.push_back(v);
            old_to_new[v] = static_cast<int>(res.vertex_map.size());
        }
    Graph rg(static_cast<int>(res.vertex_map.size()));
    const auto& edges = inst.g.edges();
    for (int e = 0; e < inst.g.m(); ++e)
        if (s.e_alive[e]) rg.add_edge(old_to_new[edges[e].first], old_to_new[edges[e].second]);
    if (inst.g.has_labels())
        for (std::size_t i = 0; i < res.vertex_map.size(); ++i)
            rg.set_label(static_cast<int>(i) + 1, inst.g.label(res.vertex_map[i]));
    std::vector<Demand> rdem;
    for (std::size_t d = 0; d < s.dem.size(); ++d)
        if (s.live[d]) {
            rdem.push_back({old_to_new[s.dem[d].a], old_to_new[s.dem[d].b]});
            res.demand_map.push_back(static_cast<int>(d));
        }
    res.reduced = Instance(std::move(rg), std::move(rdem));
    res.credit = s.value;
    for (auto& ev : s.events) res.trace.steps.push_back(std::move(ev.step));
    return res;
}

Routing expand_routing(const Instance& original, const ReductionResult& red,
                       const Routing& reduced_routing) {
    Verdict verdict = verify_routing(red.reduced, reduced_routing);
    if (!verdict.ok)
        throw input_error("expand_routing: reduced routing invalid: " + verdict.violation);
    Routing cur;
    for (const RoutingEntry& entry : reduced_routing) {
        int d = red.demand_map.at(entry.demand);
        std::vector<int> path;
        for (int v : entry.path) path.push_back(red.vertex_map.at(v - 1));
        const Demand& rd = red.reduced.demands[entry.demand];
        int a_orig = red.vertex_map.at(rd.a - 1);
        if (path.front() != a_orig) std::reverse(path.begin(), path.end());
        cur.push_back({d, std::move(path)});
    }
    std::vector<Ev> events;
    events.reserve(red.trace.steps.size());
    for (const ReductionStep& st : red.trace.steps) events.push_back({st, {}});
    return replay(original, events, std::move(cur));
}

FesSolveResult solve_fes(const Instance& inst, const Caps& caps) {
    Ctx ctx = make_ctx(inst);
    ctx.budget = caps.oracle_budget;
    solve_rec(ctx, make_root(inst));

    FesSolveResult res;
    res.opt = ctx.best.value;
    res.nodes = ctx.nodes;
    res.routing = replay(inst, ctx.best.events, {});
    Verdict verdict = verify_routing(inst, res.routing);
    if (!verdict.ok || verdict.routed != res.opt)
        throw std::logic_error("feedback-edge solver produced an invalid routing: " +
                               verdict.violation);
    return res;
}

}  // namespace mndp
