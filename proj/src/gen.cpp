#include "mndp/gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "mndp/caps.hpp"

namespace mndp {
namespace {

std::string fmt(int x) { return std::to_string(x); }

// Incremental instance builder: vertices get ids in creation order, labels
// double as the GadgetIndex bijection.
struct Builder {
    int next = 1;
    std::vector<std::string> labels;  // labels[v-1]
    std::vector<std::pair<int, int>> edges;
    std::vector<Demand> demands;
    GadgetIndex idx;

    int vertex(const std::string& label) {
        labels.push_back(label);
        if (!idx.id.emplace(label, next).second)
            throw std::logic_error("generator produced duplicate label " + label);
        return next++;
    }
    void edge(int u, int v) { edges.emplace_back(u, v); }
    void demand(int a, int b, DemandKind kind) {
        demands.push_back({a, b});
        idx.demand_kind.push_back(kind);
    }
    Generated finish(int target) {
        Graph g(next - 1);
        for (auto [u, v] : edges) g.add_edge(u, v);
        for (int v = 1; v < next; ++v) g.set_label(v, labels[v - 1]);
        Generated out;
        out.inst = Instance(std::move(g), std::move(demands), target);
        out.index = std::move(idx);
        return out;
    }
};

void check_size(long long vertices) {
    if (vertices > 20'000'000)
        throw resource_limit_error("generated instance would have " + std::to_string(vertices) +
                                   " vertices");
}

std::pair<SourceVertex, SourceVertex> norm(std::pair<SourceVertex, SourceVertex> e) {
    if (e.second < e.first) std::swap(e.first, e.second);
    return e;
}

// Shared source sanity checks (parse_source guarantees these; programmatic
// sources may not).
void validate_source(const SourceInstance& src, SourceInstance::Kind kind, const char* what) {
    if (src.kind != kind) throw input_error(std::string(what) + ": wrong source kind");
    if (src.k < 1 || src.n < 1 || src.r < 1)
        throw input_error(std::string(what) + ": source dimensions must be positive");
    std::set<std::pair<SourceVertex, SourceVertex>> seen;
    for (const auto& raw : src.edges) {
        auto [a, b] = norm(raw);
        if (a.cls < 1 || b.cls > src.classes() || a.index < 1 || a.index > src.n ||
            b.index < 1 || b.index > src.n)
            throw input_error(std::string(what) + ": source edge endpoint out of range");
        if (a.cls == b.cls)
            throw input_error(std::string(what) + ": source edges must join distinct classes");
        if (kind == SourceInstance::Kind::ChainedMulticoloredClique &&
            std::abs(src.level(a.cls) - src.level(b.cls)) > 1)
            throw input_error(std::string(what) + ": source edge spans non-adjacent levels");
        if (!seen.insert({a, b}).second)
            throw input_error(std::string(what) + ": duplicate source edge");
    }
}

// Cycle order of a choice gadget with paths of `len` vertices:
// v_1, P_1, v_2, ..., P_n, v_{n+1}, u_1, R_1, u_2, ..., R_n, u_{n+1};
// the closing edges are v_{n+1}-u_1 and u_{n+1}-v_1.
std::vector<std::string> cycle_labels(const std::string& tag, int n, int len) {
    std::vector<std::string> seq;
    seq.reserve(2 * (n * (len + 1) + 1));
    for (int p = 1; p <= n; ++p) {
        seq.push_back("v[" + tag + "]_" + fmt(p));
        for (int q = 1; q <= len; ++q) seq.push_back("w[" + tag + "," + fmt(p) + "]_" + fmt(q));
    }
    seq.push_back("v[" + tag + "]_" + fmt(n + 1));
    for (int p = 1; p <= n; ++p) {
        seq.push_back("u[" + tag + "]_" + fmt(p));
        for (int q = 1; q <= len; ++q) seq.push_back("r[" + tag + "," + fmt(p) + "]_" + fmt(q));
    }
    seq.push_back("u[" + tag + "]_" + fmt(n + 1));
    return seq;
}

int pos_v(int p, int len) { return (p - 1) * (len + 1); }
int pos_u(int p, int n, int len) { return n * (len + 1) + 1 + (p - 1) * (len + 1); }

// Builds one choice-gadget cycle and its 2n gadget demands
// (v_p, u_{p+1}) for p in [n] and (v_p, u_{p-1}) for p in [2, n+1].
void build_cycle_gadget(Builder& b, const std::string& tag, int n, int len) {
    auto seq = cycle_labels(tag, n, len);
    int first = b.next;
    for (const auto& label : seq) b.vertex(label);
    int size = static_cast<int>(seq.size());
    for (int t = 0; t < size; ++t) b.edge(first + t, first + (t + 1) % size);
    auto v_id = [&](int p) { return first + pos_v(p, len); };
    auto u_id = [&](int p) { return first + pos_u(p, n, len); };
    for (int p = 1; p <= n; ++p) b.demand(v_id(p), u_id(p + 1), DemandKind::Choice);
    for (int p = 2; p <= n + 1; ++p) b.demand(v_id(p), u_id(p - 1), DemandKind::Choice);
}

// Walks the cycle from index `from` to index `to`, stepping by +-1.
std::vector<int> cycle_arc(const std::vector<int>& seq, int from, int to, int step) {
    std::vector<int> path;
    int size = static_cast<int>(seq.size());
    for (int t = from;; t = (t + step + size) % size) {
        path.push_back(seq[t]);
        if (t == to) break;
    }
    return path;
}

std::map<std::pair<int, int>, int> demand_positions(const Instance& inst) {
    std::map<std::pair<int, int>, int> at;
    for (int d = 0; d < inst.k(); ++d) {
        const Demand& dem = inst.demands[d];
        at.emplace(std::minmax(dem.a, dem.b), d);
    }
    return at;
}

// Witness helper: entry for demand (a, b), which must exist.
RoutingEntry make_entry(const std::map<std::pair<int, int>, int>& at, int a, int b,
                        std::vector<int> path) {
    auto it = at.find(std::minmax(a, b));
    if (it == at.end()) throw std::logic_error("witness references a demand that was not generated");
    return {it->second, std::move(path)};
}

int id_of(const GadgetIndex& idx, const std::string& label) {
    auto it = idx.id.find(label);
    if (it == idx.id.end()) throw std::logic_error("generated label missing: " + label);
    return it->second;
}

std::vector<int> cycle_ids(const GadgetIndex& idx, const std::string& tag, int n, int len) {
    std::vector<int> seq;
    for (const auto& label : cycle_labels(tag, n, len)) seq.push_back(id_of(idx, label));
    return seq;
}

// Routes the two gadget demands that leave P_s and R_s unused: (v_s, u_{s+1})
// via the arc through v_1, and (v_{s+1}, u_s) via the arc through v_{n+1}.
void route_gadget(std::vector<RoutingEntry>& out, const std::map<std::pair<int, int>, int>& at,
                  const std::vector<int>& seq, int s, int n, int len) {
    out.push_back(make_entry(at, seq[pos_v(s, len)], seq[pos_u(s + 1, n, len)],
                             cycle_arc(seq, pos_v(s, len), pos_u(s + 1, n, len), -1)));
    out.push_back(make_entry(at, seq[pos_v(s + 1, len)], seq[pos_u(s, n, len)],
                             cycle_arc(seq, pos_v(s + 1, len), pos_u(s, n, len), +1)));
}

void check_pick(const SourceInstance& src, const std::vector<int>& pick, const char* what) {
    if (static_cast<int>(pick.size()) != src.classes() + 1)
        throw input_error(std::string(what) + ": selection must have one entry per class");
    for (int c = 1; c <= src.classes(); ++c)
        if (pick[c] < 1 || pick[c] > src.n)
            throw input_error(std::string(what) + ": selected index out of range for class " +
                              fmt(c));
}

Routing finish_witness(const Instance& inst, std::vector<RoutingEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const RoutingEntry& a, const RoutingEntry& b) { return a.demand < b.demand; });
    Verdict v = verify_routing(inst, entries);
    if (!v.ok) throw std::logic_error("witness routing failed verification: " + v.violation);
    if (!inst.target || v.routed != *inst.target)
        throw std::logic_error("witness routing misses the target");
    return entries;
}

// Nonempty class pairs of an mdks source, ascending, with the greedy w-slot
// assignment: pair (i, j) takes the next free slot of each side.
std::vector<AdjacencyInfo> pih_pairs(const SourceInstance& src) {
    std::set<std::pair<int, int>> nonempty;
    for (const auto& raw : src.edges) {
        auto [a, b] = norm(raw);
        nonempty.emplace(a.cls, b.cls);
    }
    std::vector<int> next_slot(src.k + 1, 1);
    std::vector<AdjacencyInfo> pairs;
    for (auto [i, j] : nonempty) {
        AdjacencyInfo info;
        info.i = i;
        info.j = j;
        info.slot_i = next_slot[i]++;
        info.slot_j = next_slot[j]++;
        if (info.slot_i > 3 || info.slot_j > 3)
            throw input_error("gen_pih: class support exceeds 3");
        pairs.push_back(info);
    }
    return pairs;
}

}  // namespace

Generated gen_pih(const SourceInstance& src) {
    validate_source(src, SourceInstance::Kind::DistributedKSubgraph, "gen_pih");
    int k = src.k, n = src.n;
    auto pairs = pih_pairs(src);
    int sigma = static_cast<int>(pairs.size());
    for (int i = 1; i <= k; ++i) {
        bool covered = false;
        for (const auto& p : pairs) covered |= p.i == i || p.j == i;
        if (!covered) throw input_error("gen_pih: class " + fmt(i) + " has support 0, need 1..3");
    }
    check_size(1LL * k * (8LL * n + 2) + sigma);

    Builder b;
    for (int i = 1; i <= k; ++i) build_cycle_gadget(b, fmt(i), n, 3);
    std::map<std::pair<int, int>, std::pair<int, int>> slots;
    for (auto& info : pairs) {
        info.vertex = b.vertex("e[" + fmt(info.i) + "," + fmt(info.j) + "]");
        b.idx.special.push_back(info.vertex);
        for (int p = 1; p <= n; ++p)
            b.edge(info.vertex,
                   id_of(b.idx, "w[" + fmt(info.i) + "," + fmt(p) + "]_" + fmt(info.slot_i)));
        for (int p = 1; p <= n; ++p)
            b.edge(info.vertex,
                   id_of(b.idx, "w[" + fmt(info.j) + "," + fmt(p) + "]_" + fmt(info.slot_j)));
        slots[{info.i, info.j}] = {info.slot_i, info.slot_j};
    }
    b.idx.adjacencies = pairs;
    for (const auto& raw : src.edges) {
        auto [a, c] = norm(raw);
        auto [x, y] = slots.at({a.cls, c.cls});
        b.demand(id_of(b.idx, "w[" + fmt(a.cls) + "," + fmt(a.index) + "]_" + fmt(x)),
                 id_of(b.idx, "w[" + fmt(c.cls) + "," + fmt(c.index) + "]_" + fmt(y)),
                 DemandKind::Adjacency);
    }
    return b.finish(2 * k + sigma);
}

Routing witness_pih(const SourceInstance& src, const Generated& gen, const std::vector<int>& pick) {
    validate_source(src, SourceInstance::Kind::DistributedKSubgraph, "witness_pih");
    check_pick(src, pick, "witness_pih");
    auto at = demand_positions(gen.inst);
    std::vector<RoutingEntry> entries;
    for (int i = 1; i <= src.k; ++i)
        route_gadget(entries, at, cycle_ids(gen.index, fmt(i), src.n, 3), pick[i], src.n, 3);
    for (const auto& info : gen.index.adjacencies) {
        if (!src.has_edge({info.i, pick[info.i]}, {info.j, pick[info.j]}))
            throw input_error("witness_pih: selection misses an edge between classes " +
                              fmt(info.i) + " and " + fmt(info.j));
        int a = id_of(gen.index,
                      "w[" + fmt(info.i) + "," + fmt(pick[info.i]) + "]_" + fmt(info.slot_i));
        int c = id_of(gen.index,
                      "w[" + fmt(info.j) + "," + fmt(pick[info.j]) + "]_" + fmt(info.slot_j));
        entries.push_back(make_entry(at, a, c, {a, info.vertex, c}));
    }
    return finish_witness(gen.inst, std::move(entries));
}

namespace {

std::string xnlp_tag(int i, int j) { return fmt(i) + "," + fmt(j); }

}  // namespace

Generated gen_xnlp(const SourceInstance& src) {
    validate_source(src, SourceInstance::Kind::ChainedMulticoloredClique, "gen_xnlp");
    int r = src.r, k = src.k, n = src.n;
    long long gadget = 6LL * n * k + 2 * n + 2;
    check_size(1LL * r * k * gadget + 1LL * r * k * (k - 1) / 2 + 1LL * (r - 1) * k * k);

    // Every slot pair the target counts must be witnessable by some edge.
    std::set<std::pair<int, int>> covered;
    for (const auto& raw : src.edges) {
        auto [a, c] = norm(raw);
        covered.emplace(a.cls, c.cls);
    }
    for (int i = 1; i <= r; ++i)
        for (int j1 = 1; j1 <= k; ++j1)
            for (int j2 = j1 + 1; j2 <= k; ++j2)
                if (!covered.count({(i - 1) * k + j1, (i - 1) * k + j2}))
                    throw input_error("gen_xnlp: no edge between level " + fmt(i) + " colors " +
                                      fmt(j1) + " and " + fmt(j2));
    for (int i = 1; i + 1 <= r; ++i)
        for (int j = 1; j <= k; ++j)
            for (int j2 = 1; j2 <= k; ++j2)
                if (!covered.count({(i - 1) * k + j, i * k + j2}))
                    throw input_error("gen_xnlp: no edge between level " + fmt(i) + " color " +
                                      fmt(j) + " and level " + fmt(i + 1) + " color " + fmt(j2));

    Builder b;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= k; ++j) build_cycle_gadget(b, xnlp_tag(i, j), n, 3 * k);
    auto w_id = [&](int i, int j, int p, int q) {
        return id_of(b.idx, "w[" + xnlp_tag(i, j) + "," + fmt(p) + "]_" + fmt(q));
    };
    for (int i = 1; i <= r; ++i)
        for (int j1 = 1; j1 <= k; ++j1)
            for (int j2 = j1 + 1; j2 <= k; ++j2) {
                int e = b.vertex("e[" + fmt(i) + "][" + fmt(j1) + "," + fmt(j2) + "]");
                b.idx.special.push_back(e);
                for (int p = 1; p <= n; ++p) b.edge(e, w_id(i, j1, p, j2));
                for (int p = 1; p <= n; ++p) b.edge(e, w_id(i, j2, p, j1));
            }
    for (int i = 1; i + 1 <= r; ++i)
        for (int j = 1; j <= k; ++j)
            for (int j2 = 1; j2 <= k; ++j2) {
                int e = b.vertex("e[" + fmt(i) + "," + fmt(i + 1) + "][" + fmt(j) + "," + fmt(j2) +
                                 "]");
                b.idx.special.push_back(e);
                for (int p = 1; p <= n; ++p) b.edge(e, w_id(i, j, p, 2 * k + j2));
                for (int p = 1; p <= n; ++p) b.edge(e, w_id(i + 1, j2, p, k + j));
            }
    for (const auto& raw : src.edges) {
        auto [a, c] = norm(raw);
        int li = src.level(a.cls), ci = src.color(a.cls);
        int lj = src.level(c.cls), cj = src.color(c.cls);
        if (li == lj)
            b.demand(w_id(li, ci, a.index, cj), w_id(lj, cj, c.index, ci), DemandKind::Adjacency);
        else
            b.demand(w_id(li, ci, a.index, 2 * k + cj), w_id(lj, cj, c.index, k + ci),
                     DemandKind::Adjacency);
    }
    int target = 2 * r * k + r * (k * (k - 1) / 2) + (r - 1) * k * k;
    return b.finish(target);
}

Routing witness_xnlp(const SourceInstance& src, const Generated& gen,
                     const std::vector<int>& pick) {
    validate_source(src, SourceInstance::Kind::ChainedMulticoloredClique, "witness_xnlp");
    check_pick(src, pick, "witness_xnlp");
    int r = src.r, k = src.k, n = src.n;
    auto cls = [&](int i, int j) { return (i - 1) * k + j; };
    auto s = [&](int i, int j) { return pick[cls(i, j)]; };
    auto at = demand_positions(gen.inst);
    auto w_id = [&](int i, int j, int p, int q) {
        return id_of(gen.index, "w[" + xnlp_tag(i, j) + "," + fmt(p) + "]_" + fmt(q));
    };
    std::vector<RoutingEntry> entries;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= k; ++j)
            route_gadget(entries, at, cycle_ids(gen.index, xnlp_tag(i, j), n, 3 * k), s(i, j), n,
                         3 * k);
    for (int i = 1; i <= r; ++i)
        for (int j1 = 1; j1 <= k; ++j1)
            for (int j2 = j1 + 1; j2 <= k; ++j2) {
                if (!src.has_edge({cls(i, j1), s(i, j1)}, {cls(i, j2), s(i, j2)}))
                    throw input_error("witness_xnlp: selection misses an edge between level " +
                                      fmt(i) + " colors " + fmt(j1) + " and " + fmt(j2));
                int a = w_id(i, j1, s(i, j1), j2);
                int c = w_id(i, j2, s(i, j2), j1);
                entries.push_back(make_entry(
                    at, a, c,
                    {a, id_of(gen.index, "e[" + fmt(i) + "][" + fmt(j1) + "," + fmt(j2) + "]"),
                     c}));
            }
    for (int i = 1; i + 1 <= r; ++i)
        for (int j = 1; j <= k; ++j)
            for (int j2 = 1; j2 <= k; ++j2) {
                if (!src.has_edge({cls(i, j), s(i, j)}, {cls(i + 1, j2), s(i + 1, j2)}))
                    throw input_error("witness_xnlp: selection misses an edge between level " +
                                      fmt(i) + " color " + fmt(j) + " and level " + fmt(i + 1) +
                                      " color " + fmt(j2));
                int a = w_id(i, j, s(i, j), 2 * k + j2);
                int c = w_id(i + 1, j2, s(i + 1, j2), k + j);
                entries.push_back(
                    make_entry(at, a, c,
                               {a,
                                id_of(gen.index, "e[" + fmt(i) + "," + fmt(i + 1) + "][" + fmt(j) +
                                                     "," + fmt(j2) + "]"),
                                c}));
            }
    return finish_witness(gen.inst, std::move(entries));
}

namespace {

// Recursive adjacency-gadget construction. Every call materializes fresh
// row/column instances of the choice gadgets for its intervals; base gadgets
// add a validation vertex, inner gadgets recurse into four quadrants and
// copy-link each original to its two counterparts among the children.
struct TdBuild {
    Builder b;
    const SourceInstance& src;
    int n;
    std::set<std::pair<SourceVertex, SourceVertex>> adj;

    explicit TdBuild(const SourceInstance& s) : src(s), n(s.n) {
        for (const auto& raw : s.edges) adj.insert(norm(raw));
    }

    int v_id(int inst, int j, int q) const {
        return b.idx.instances[inst].first + 3 * (j - 1) + (q - 1);
    }

    int new_instance(int cls) {
        int ordinal = static_cast<int>(b.idx.instances.size());
        std::string c = fmt(ordinal + 1);
        int first = b.next;
        for (int j = 1; j <= n; ++j)
            for (int q = 1; q <= 3; ++q) b.vertex("v[" + c + "," + fmt(j) + "]_" + fmt(q));
        b.idx.instances.push_back({cls, first});
        for (int j = 1; j <= n; ++j) {
            b.edge(v_id(ordinal, j, 1), v_id(ordinal, j, 2));
            b.edge(v_id(ordinal, j, 2), v_id(ordinal, j, 3));
        }
        for (int j = 2; j <= n; ++j) {
            int alpha = b.vertex("a[" + c + "]_" + fmt(j));
            int beta = b.vertex("b[" + c + "]_" + fmt(j));
            b.edge(alpha, v_id(ordinal, 1, 1));
            b.edge(alpha, v_id(ordinal, j, 1));
            b.edge(beta, v_id(ordinal, 1, 3));
            b.edge(beta, v_id(ordinal, j, 3));
            b.demand(alpha, beta, DemandKind::Choice);
        }
        return ordinal;
    }

    void add_copy(int from, int to, int t) {
        int g = b.vertex("g[" + fmt(from + 1) + "]_" + fmt(t));
        b.idx.special.push_back(g);
        for (int j = 1; j <= n; ++j) b.edge(g, v_id(from, j, t + 1));
        for (int j = 1; j <= n; ++j) b.edge(g, v_id(to, j, 1));
        for (int j = 1; j <= n; ++j) b.demand(v_id(from, j, t + 1), v_id(to, j, 1), DemandKind::Copy);
        b.idx.copies.push_back({g, from, to, t});
    }

    struct Originals {
        std::vector<int> rows, cols;
    };

    Originals build(int i1, int i2, int j1, int j2) {
        Originals mine;
        for (int i = i1; i <= i2; ++i) mine.rows.push_back(new_instance(i));
        for (int j = j1; j <= j2; ++j) mine.cols.push_back(new_instance(j));
        if (i1 == i2 && j1 == j2) {
            int m = b.vertex("m[" + fmt(i1) + "," + fmt(j1) + "]");
            b.idx.special.push_back(m);
            int row = mine.rows[0], col = mine.cols[0];
            for (int j = 1; j <= n; ++j) b.edge(m, v_id(row, j, 2));
            for (int j = 1; j <= n; ++j) b.edge(m, v_id(col, j, 2));
            // Same-class pairs realize the source's implicit self-loops: the
            // demand joins the two distinct instances of the same gadget.
            for (int a = 1; a <= n; ++a)
                for (int c = 1; c <= n; ++c)
                    if ((i1 == j1 && a == c) || adj.count(norm({{i1, a}, {j1, c}})))
                        b.demand(v_id(row, a, 2), v_id(col, c, 2), DemandKind::Validation);
            b.idx.validations.push_back({m, row, col});
            return mine;
        }
        int li = (i1 + i2) / 2, hi = li + 1;
        int lj = (j1 + j2) / 2, hj = lj + 1;
        Originals ll = build(i1, li, j1, lj);
        Originals lr = build(i1, li, hj, j2);
        Originals rl = build(hi, i2, j1, lj);
        Originals rr = build(hi, i2, hj, j2);
        for (int t = 0; t < static_cast<int>(mine.rows.size()); ++t) {
            int i = i1 + t;
            const Originals& left = i <= li ? ll : rl;
            const Originals& right = i <= li ? lr : rr;
            int slot = i <= li ? i - i1 : i - hi;
            add_copy(mine.rows[t], left.rows[slot], 1);
            add_copy(mine.rows[t], right.rows[slot], 2);
        }
        for (int t = 0; t < static_cast<int>(mine.cols.size()); ++t) {
            int j = j1 + t;
            const Originals& left = j <= lj ? ll : lr;
            const Originals& right = j <= lj ? rl : rr;
            int slot = j <= lj ? j - j1 : j - hj;
            add_copy(mine.cols[t], left.cols[slot], 1);
            add_copy(mine.cols[t], right.cols[slot], 2);
        }
        return mine;
    }
};

}  // namespace

Generated gen_td(const SourceInstance& src) {
    validate_source(src, SourceInstance::Kind::MulticoloredClique, "gen_td");
    int k = src.k, n = src.n;
    if ((k & (k - 1)) != 0) throw input_error("gen_td: class count must be a power of two");

    std::set<std::pair<int, int>> covered;
    for (const auto& raw : src.edges) {
        auto [a, c] = norm(raw);
        covered.emplace(a.cls, c.cls);
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (!covered.count({i, j}))
                throw input_error("gen_td: no edge between classes " + fmt(i) + " and " + fmt(j));

    long long gamma = 2LL * k * (2 * k - 1);
    long long delta = 5LL * k * k - 4 * k;
    check_size(gamma * (5LL * n - 2) + delta);

    TdBuild td(src);
    td.build(1, k, 1, k);
    long long target = gamma * (n - 1) + delta;
    return td.b.finish(static_cast<int>(target));
}

Routing witness_td(const SourceInstance& src, const Generated& gen, const std::vector<int>& pick) {
    validate_source(src, SourceInstance::Kind::MulticoloredClique, "witness_td");
    check_pick(src, pick, "witness_td");
    for (int i = 1; i <= src.k; ++i)
        for (int j = i + 1; j <= src.k; ++j)
            if (!src.has_edge({i, pick[i]}, {j, pick[j]}))
                throw input_error("witness_td: selection misses the edge between class " + fmt(i) +
                                  " vertex " + fmt(pick[i]) + " and class " + fmt(j) + " vertex " +
                                  fmt(pick[j]));
    int n = src.n;
    auto at = demand_positions(gen.inst);
    auto v_id = [&](int inst, int j, int q) {
        return gen.index.instances[inst].first + 3 * (j - 1) + (q - 1);
    };
    std::vector<RoutingEntry> entries;
    for (int c = 0; c < static_cast<int>(gen.index.instances.size()); ++c) {
        int s = pick[gen.index.instances[c].cls];
        std::string tag = fmt(c + 1);
        for (int j = 2; j <= n; ++j) {
            int alpha = id_of(gen.index, "a[" + tag + "]_" + fmt(j));
            int beta = id_of(gen.index, "b[" + tag + "]_" + fmt(j));
            int through = j == s ? 1 : j;  // route via P_1 when j is the free path
            entries.push_back(make_entry(at, alpha, beta,
                                         {alpha, v_id(c, through, 1), v_id(c, through, 2),
                                          v_id(c, through, 3), beta}));
        }
    }
    for (const auto& copy : gen.index.copies) {
        int s = pick[gen.index.instances[copy.from].cls];
        int a = v_id(copy.from, s, copy.t + 1);
        int c = v_id(copy.to, s, 1);
        entries.push_back(make_entry(at, a, c, {a, copy.vertex, c}));
    }
    for (const auto& val : gen.index.validations) {
        int a = v_id(val.row, pick[gen.index.instances[val.row].cls], 2);
        int c = v_id(val.col, pick[gen.index.instances[val.col].cls], 2);
        entries.push_back(make_entry(at, a, c, {a, val.vertex, c}));
    }
    return finish_witness(gen.inst, std::move(entries));
}

Instance random_instance(int n, int m, int k, std::uint64_t seed) {
    if (n < 1) throw input_error("random_instance: need at least one vertex");
    if (m < 0 || k < 0) throw input_error("random_instance: negative edge or demand count");
    long long max_m = 1LL * n * (n - 1) / 2;
    if (m > max_m) throw input_error("random_instance: more edges than vertex pairs");
    if (k > 0 && n < 2) throw input_error("random_instance: demands need two distinct endpoints");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pool;
    pool.reserve(max_m);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pool.emplace_back(u, v);
    // Fisher-Yates prefix: identical edge choice on every platform.
    for (int i = 0; i < m; ++i) {
        int j = i + static_cast<int>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    Graph g(n);
    for (int i = 0; i < m; ++i) g.add_edge(pool[i].first, pool[i].second);
    std::vector<Demand> demands;
    for (int d = 0; d < k; ++d) {
        int a = 1 + static_cast<int>(rng() % n);
        int b = 1 + static_cast<int>(rng() % (n - 1));
        if (b >= a) ++b;
        demands.push_back({a, b});
    }
    return Instance(std::move(g), std::move(demands));
}

}  // namespace mndp
