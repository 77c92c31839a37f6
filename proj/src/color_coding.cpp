#include "mndp/color_coding.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mndp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// min(C(n,k), cap+1); cap+1 signals overflow
std::int64_t binom_clamped(int n, int k, std::int64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t res = 1;
    for (int i = 1; i <= k; ++i) {
        if (res > cap) return cap + 1;
        res = res * (n - k + i) / i;
    }
    return std::min(res, cap + 1);
}

void check_tau(int tau) {
    if (tau < 1 || tau > 30)
        throw input_error("tau " + std::to_string(tau) + " outside the supported range 1..30");
}

// colors of [1..m] under the interval partition given by ascending cuts
// (a cut at c separates c from c+1): color(x) = 1 + #{cuts < x}
std::vector<int> interval_colors(int m, const std::vector<int>& cuts) {
    std::vector<int> col(m + 1, 0);
    std::size_t ci = 0;
    for (int x = 1; x <= m; ++x) {
        while (ci < cuts.size() && cuts[ci] < x) ++ci;
        col[x] = 1 + static_cast<int>(ci);
    }
    return col;
}

template <typename Fn>
void for_each_combination(int m, int r, Fn fn) {
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i + 1;
    if (r == 0) {
        fn(comb);
        return;
    }
    if (r > m) return;
    while (true) {
        fn(comb);
        int i = r - 1;
        while (i >= 0 && comb[i] == m - r + i + 1) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
}

}  // namespace

Coloring color_graph(int n, int tau, std::uint64_t seed) {
    check_tau(tau);
    std::mt19937_64 rng(seed);
    Coloring c{tau, std::vector<int>(n + 1, 0)};
    for (int v = 1; v <= n; ++v) c.color[v] = 1 + static_cast<int>(rng() % tau);
    return c;
}

std::optional<RoutableHit> routable_within(const Instance& inst, const Coloring& coloring,
                                           std::uint32_t color_set) {
    const Graph& g = inst.g;
    std::vector<char> allowed(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v)
        allowed[v] = (color_set >> (coloring.color[v] - 1)) & 1u;
    for (int i = 0; i < inst.k(); ++i) {
        const Demand& d = inst.demands[i];
        if (!allowed[d.a] || !allowed[d.b]) continue;
        std::vector<int> path = shortest_path(g, d.a, d.b, allowed);
        if (!path.empty()) return RoutableHit{i, std::move(path)};
    }
    return std::nullopt;
}

ColorSubsetTable colorful_max_routed(const Instance& inst, const Coloring& coloring) {
    check_tau(coloring.tau);
    const Graph& g = inst.g;
    int tau = coloring.tau;
    std::uint32_t full = (tau == 30) ? 0x3FFFFFFFu : ((1u << tau) - 1);
    std::size_t nsub = static_cast<std::size_t>(full) + 1;

    // f[S] = 1 iff some demand is routable among the colors of S
    std::vector<std::int8_t> f(nsub, 0);
    {
        std::vector<char> allowed(g.n() + 1, 0);
        std::vector<char> seen(g.n() + 1, 0);
        std::vector<int> stack;
        for (std::uint32_t S = 1; S <= full; ++S) {
            for (int v = 1; v <= g.n(); ++v)
                allowed[v] = (S >> (coloring.color[v] - 1)) & 1u;
            bool hit = false;
            for (int i = 0; i < inst.k() && !hit; ++i) {
                const Demand& d = inst.demands[i];
                if (!allowed[d.a] || !allowed[d.b]) continue;
                if (d.a == d.b) {
                    hit = true;
                    break;
                }
                std::fill(seen.begin(), seen.end(), 0);
                stack.assign(1, d.a);
                seen[d.a] = 1;
                while (!stack.empty() && !hit) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int w : g.neighbors(v)) {
                        if (!allowed[w] || seen[w]) continue;
                        if (w == d.b) {
                            hit = true;
                            break;
                        }
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            f[S] = hit ? 1 : 0;
        }
    }

    ColorSubsetTable table;
    table.tau = tau;
    table.value.assign(nsub, 0);
    table.choice.assign(nsub, 0);
    for (std::uint32_t S = 1; S <= full; ++S) {
        std::uint32_t low = S & -S;
        int best = -1;
        std::uint32_t best_part = 0;
        for (std::uint32_t part = S;; part = (part - 1) & S) {
            if (part & low) {
                int cand = f[part] + table.value[S ^ part];
                if (cand > best) {
                    best = cand;
                    best_part = part;
                }
            }
            if (part == 0) break;
        }
        table.value[S] = static_cast<std::int16_t>(best);
        table.choice[S] = best_part;
    }
    return table;
}

Routing extract_routing(const Instance& inst, const Coloring& coloring,
                        const ColorSubsetTable& table) {
    Routing routing;
    std::uint32_t S = static_cast<std::uint32_t>(table.value.size() - 1);
    while (S && table.value[S] > 0) {
        std::uint32_t part = table.choice[S];
        auto hit = routable_within(inst, coloring, part);
        if (hit) routing.push_back({hit->demand, std::move(hit->path)});
        S ^= part;
    }
    return routing;
}

std::vector<Coloring> build_coloring_family(int n, int tau, const Caps& caps,
                                            FamilyStrategy strategy) {
    check_tau(tau);
    if (n < 0) throw input_error("coloring family: negative n");
    std::vector<Coloring> family;

    if (tau >= n) {
        Coloring ident{tau, std::vector<int>(n + 1, 0)};
        for (int v = 1; v <= n; ++v) ident.color[v] = v;
        family.push_back(std::move(ident));
        return family;
    }

    // direct: interval partitions of [n]
    std::int64_t direct_size = binom_clamped(n - 1, tau - 1, caps.family_cap);
    // composed: prime-affine maps into [tau^2], then interval partitions
    int m = tau * tau;
    std::int64_t p = std::max<std::int64_t>({n + 1, static_cast<std::int64_t>(tau) * tau * tau -
                                                        static_cast<std::int64_t>(tau) * tau + 2});
    while (!is_prime(p)) ++p;
    std::int64_t stage2 = binom_clamped(m - 1, tau - 1, caps.family_cap);
    std::int64_t composed_size = (stage2 > caps.family_cap / std::max<std::int64_t>(p - 1, 1))
                                     ? caps.family_cap + 1
                                     : (p - 1) * stage2;

    bool use_direct;
    switch (strategy) {
        case FamilyStrategy::Direct: use_direct = true; break;
        case FamilyStrategy::Composed: use_direct = false; break;
        default: use_direct = direct_size <= composed_size; break;
    }
    std::int64_t size = use_direct ? direct_size : composed_size;
    if (size > caps.family_cap)
        throw resource_limit_error("coloring family for n=" + std::to_string(n) +
                                   " tau=" + std::to_string(tau) + " exceeds the cap of " +
                                   std::to_string(caps.family_cap) + " members");

    if (use_direct) {
        for_each_combination(n - 1, tau - 1, [&](const std::vector<int>& cuts) {
            family.push_back({tau, interval_colors(n, cuts)});
        });
    } else {
        std::vector<std::vector<int>> blocks;  // all interval partitions of [m]
        for_each_combination(m - 1, tau - 1, [&](const std::vector<int>& cuts) {
            blocks.push_back(interval_colors(m, cuts));
        });
        for (std::int64_t a = 1; a < p; ++a)
            for (const auto& block : blocks) {
                Coloring c{tau, std::vector<int>(n + 1, 0)};
                for (int v = 1; v <= n; ++v)
                    c.color[v] = block[1 + static_cast<int>((a * v) % p % m)];
                family.push_back(std::move(c));
            }
    }
    return family;
}

namespace {

struct ColoringPlan {
    SweepMode mode;
    int n = 0;
    int tau = 0;
    std::uint64_t seed = 0;
    std::vector<Coloring> family;  // Derandomized only
    std::int64_t count = 0;

    Coloring at(std::int64_t i) const {
        switch (mode) {
            case SweepMode::MonteCarlo:
                return color_graph(n, tau, splitmix64(seed + static_cast<std::uint64_t>(i)));
            case SweepMode::Derandomized:
                return family[static_cast<std::size_t>(i)];
            case SweepMode::Exhaustive: {
                Coloring c{tau, std::vector<int>(n + 1, 0)};
                std::int64_t rest = i;
                for (int v = 1; v <= n; ++v) {
                    c.color[v] = 1 + static_cast<int>(rest % tau);
                    rest /= tau;
                }
                return c;
            }
        }
        throw std::logic_error("unreachable");
    }
};

ColoringPlan make_plan(const Instance& inst, int tau, const SolveOptions& opts) {
    ColoringPlan plan;
    plan.mode = opts.mode;
    plan.n = inst.g.n();
    plan.tau = tau;
    plan.seed = opts.seed;
    const std::int64_t huge = std::numeric_limits<std::int64_t>::max() / 4;
    switch (opts.mode) {
        case SweepMode::MonteCarlo: {
            if (!(opts.delta > 0.0 && opts.delta < 1.0))
                throw input_error("delta must lie in (0,1)");
            long double reps = std::ceil(std::exp(static_cast<long double>(tau)) *
                                         std::log(1.0L / opts.delta));
            plan.count = reps > static_cast<long double>(huge)
                             ? huge
                             : static_cast<std::int64_t>(reps);
            break;
        }
        case SweepMode::Derandomized:
            plan.family = build_coloring_family(plan.n, tau, opts.caps);
            plan.count = static_cast<std::int64_t>(plan.family.size());
            break;
        case SweepMode::Exhaustive: {
            std::int64_t count = 1;
            for (int i = 0; i < plan.n; ++i) {
                if (count > huge / std::max(tau, 1)) {
                    count = huge;
                    break;
                }
                count *= tau;
            }
            plan.count = count;
            break;
        }
    }
    return plan;
}

struct SweepOutcome {
    int best = 0;
    std::int64_t best_index = -1;
    std::int64_t tried = 0;
};

constexpr std::int64_t kBlock = 64;

int coloring_value(const Instance& inst, const Coloring& c) {
    return colorful_max_routed(inst, c).best();
}

// Serial reference for the sweep. Block-structured exactly like the
// parallel kernel so both stop after the same prefix of colorings.
SweepOutcome sweep_serial(const Instance& inst, const ColoringPlan& plan, int stop_at) {
    SweepOutcome out;
    for (std::int64_t lo = 0; lo < plan.count; lo += kBlock) {
        std::int64_t hi = std::min(plan.count, lo + kBlock);
        for (std::int64_t i = lo; i < hi; ++i) {
            int val = coloring_value(inst, plan.at(i));
            if (val > out.best) {
                out.best = val;
                out.best_index = i;
            }
        }
        out.tried = hi;
        if (out.best >= stop_at) break;
    }
    return out;
}

SweepOutcome sweep_parallel(const Instance& inst, const ColoringPlan& plan, int stop_at) {
    SweepOutcome out;
    std::vector<int> vals(kBlock);
    for (std::int64_t lo = 0; lo < plan.count; lo += kBlock) {
        std::int64_t hi = std::min(plan.count, lo + kBlock);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::int64_t i = lo; i < hi; ++i)
            vals[static_cast<std::size_t>(i - lo)] = coloring_value(inst, plan.at(i));
        for (std::int64_t i = lo; i < hi; ++i)
            if (vals[static_cast<std::size_t>(i - lo)] > out.best) {
                out.best = vals[static_cast<std::size_t>(i - lo)];
                out.best_index = i;
            }
        out.tried = hi;
        if (out.best >= stop_at) break;
    }
    return out;
}

}  // namespace

std::int64_t planned_colorings(const Instance& inst, int tau, const SolveOptions& opts) {
    return make_plan(inst, tau, opts).count;
}

SolveResult solve_with_tau(const Instance& inst, int ell, int tau, const SolveOptions& opts) {
    if (ell <= 0) return {Decision::Yes, 0, {}, 0};
    check_tau(tau);
    if (tau > opts.caps.tau_cap)
        throw resource_limit_error("tau " + std::to_string(tau) + " exceeds the cap of " +
                                   std::to_string(opts.caps.tau_cap));

    ColoringPlan plan = make_plan(inst, tau, opts);
    // per-coloring cost: ~3^tau submask steps for the table plus 2^tau demand probes
    long double per_coloring = std::pow(3.0L, tau) +
                               std::ldexp(static_cast<long double>(std::max(1, inst.k())), tau);
    if (static_cast<long double>(plan.count) * per_coloring >
        static_cast<long double>(opts.caps.sweep_budget))
        throw resource_limit_error(
            "sweep of " + std::to_string(plan.count) + " colorings at tau=" +
            std::to_string(tau) + " exceeds the budget of " +
            std::to_string(opts.caps.sweep_budget));

    SweepOutcome outcome = opts.parallel ? sweep_parallel(inst, plan, ell)
                                         : sweep_serial(inst, plan, ell);

    SolveResult result;
    result.best = outcome.best;
    result.colorings_tried = outcome.tried;
    if (outcome.best >= ell)
        result.decision = Decision::Yes;
    else if (ell > inst.k() || opts.mode != SweepMode::MonteCarlo)
        result.decision = Decision::No;
    else
        result.decision = Decision::Unknown;
    if (outcome.best > 0) {
        Coloring winner = plan.at(outcome.best_index);
        result.routing = extract_routing(inst, winner, colorful_max_routed(inst, winner));
        Verdict v = verify_routing(inst, result.routing);
        if (!v.ok || v.routed != outcome.best)
            throw std::logic_error("extracted routing failed verification: " + v.violation);
    }
    return result;
}

}  // namespace mndp
