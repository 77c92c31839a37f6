#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mndp/approx.hpp"
#include "mndp/caps.hpp"
#include "mndp/color_coding.hpp"
#include "mndp/fpt.hpp"
#include "mndp/gen.hpp"
#include "mndp/io.hpp"
#include "mndp/oracle.hpp"
#include "mndp/structural.hpp"

using namespace mndp;

namespace {

enum ExitCode { kSolved = 0, kNo = 1, kUsage = 2, kUnknown = 3 };

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", ms);
    return buf;
}

std::string fmt_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

// One report row: a TSV header line and a value line, elapsed always the
// final column so scripts can strip timing before byte comparison. The
// "text" format prints the same fields as key: value lines instead.
std::string g_format = "tsv";

struct Report {
    std::vector<std::pair<std::string, std::string>> cols;

    void add(const std::string& key, const std::string& value) { cols.push_back({key, value}); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }

    void print(double elapsed_ms) const {
        if (g_format == "text") {
            for (const auto& [k, v] : cols) std::cout << k << ": " << v << '\n';
            std::cout << "elapsed_ms: " << fmt_ms(elapsed_ms) << '\n';
            return;
        }
        std::string header, values;
        for (const auto& [k, v] : cols) {
            header += k + '\t';
            values += v + '\t';
        }
        std::cout << header << "elapsed_ms\n" << values << fmt_ms(elapsed_ms) << '\n';
    }
};

std::string sanitize(std::string text) {
    for (char& c : text)
        if (c == '\t' || c == '\n') c = ' ';
    return text;
}

// Certification: every reported value must come with a routing of exactly
// that many demands that verifies against the instance.
void certify(const Instance& inst, const Routing& routing, int value, const char* who) {
    Verdict v = verify_routing(inst, routing);
    if (!v.ok || v.routed != value)
        throw std::logic_error(std::string(who) + " produced an uncertified value: " +
                               (v.ok ? "routed " + std::to_string(v.routed) + " of " +
                                           std::to_string(value)
                                     : v.violation));
}

void emit_routing(const Routing& routing, const std::string& out_path, bool print) {
    if (!out_path.empty()) write_file(out_path, serialize_routing(routing));
    if (print) std::cout << serialize_routing(routing);
}

std::string params_summary(const ParamReport& p) {
    auto one = [](const char* name, const ParamResult& r) {
        return std::string(name) + "=" + (r.value ? std::to_string(*r.value) : "?");
    };
    std::string s = "fes=" + std::to_string(p.fes.value);
    s += "," + one("vc", p.vc) + "," + one("cvd", p.cvd) + "," + one("vi", p.vi) +
         "," + one("fvs", p.fvs);
    s += ",td=" + std::string(p.td.exact ? std::to_string(p.td.depth) : "?");
    return s;
}

struct SolveArgs {
    std::string path;
    std::string strategy = "auto";
    std::optional<int> ell;
    std::optional<int> tau;
    std::string mode = "derandomized";
    std::uint64_t seed = 1;
    std::string routing_out;
    bool print_routing = false;
    bool serial = false;
};

SweepMode parse_mode(const std::string& mode) {
    if (mode == "montecarlo") return SweepMode::MonteCarlo;
    if (mode == "derandomized") return SweepMode::Derandomized;
    return SweepMode::Exhaustive;
}

// Smallest sound color count: structural bounds where parameters are
// known, the vertex count as the unconditional fallback.
int derive_tau(const Instance& inst, const ParamReport& params, int ell, const Caps& caps) {
    long long best = inst.g.n();
    auto consider = [&](ParamKind kind, const std::optional<int>& value) {
        if (value) best = std::min(best, tau_bound(kind, *value, ell));
    };
    consider(ParamKind::Vc, params.vc.value);
    consider(ParamKind::Cvd, params.cvd.value);
    consider(ParamKind::Vi, params.vi.value);
    if (params.td.exact) consider(ParamKind::Td, params.td.depth);
    (void)caps;
    return static_cast<int>(best);
}

// Predicted work per strategy; rough surrogates, used only to rank.
struct AutoChoice {
    std::string strategy;
    int tau = 0;
    std::string log;
};

AutoChoice pick_strategy(const Instance& inst, const ParamReport& params,
                         std::optional<int> ell, const SolveOptions& opts) {
    int n = inst.g.n(), k = inst.k();
    int ell_for_bound = ell ? *ell : k;
    double cost_fes = std::pow(3.0, std::min(params.fes.value, 40)) * (n + inst.g.m() + k + 1);
    double cost_brute = std::pow(1.6, std::min(n, 80)) * (k + 1);

    int tau = derive_tau(inst, params, ell_for_bound, opts.caps);
    double cost_color = std::numeric_limits<double>::infinity();
    if (tau <= opts.caps.tau_cap) {
        double per = std::pow(3.0, tau) + k * std::pow(2.0, tau);
        cost_color = static_cast<double>(planned_colorings(inst, tau, opts)) * per;
    }

    AutoChoice choice;
    choice.tau = tau;
    double best = cost_fes;
    choice.strategy = "fes";
    if (cost_brute < best) {
        best = cost_brute;
        choice.strategy = "brute";
    }
    if (cost_color < best) {
        best = cost_color;
        choice.strategy = "colorcode";
    }
    choice.log = "auto: fes cost " + fmt_num(cost_fes) + " (fes=" +
                 std::to_string(params.fes.value) + "), brute cost " + fmt_num(cost_brute) +
                 ", colorcode cost " + fmt_num(cost_color) + " (tau=" + std::to_string(tau) +
                 "); picked " + choice.strategy;
    return choice;
}

int cmd_solve(const SolveArgs& args) {
    auto start = Clock::now();
    const Caps& caps = default_caps();
    Instance inst = parse_instance(read_file(args.path));
    std::optional<int> ell = args.ell ? args.ell : inst.target;

    SolveOptions opts;
    opts.mode = parse_mode(args.mode);
    opts.seed = args.seed;
    opts.parallel = !args.serial;
    opts.caps = caps;

    std::string strategy = args.strategy;
    int tau = args.tau.value_or(0);
    std::string params_col = "-";

    if (strategy == "auto") {
        ParamReport params = compute_params(inst.g, caps);
        params_col = params_summary(params);
        AutoChoice choice = pick_strategy(inst, params, ell, opts);
        std::cerr << choice.log << '\n';
        strategy = choice.strategy;
        if (tau == 0) tau = choice.tau;
    }

    int value = 0;
    Routing routing;
    Decision decision = Decision::Yes;  // meaningful only when ell is set
    bool have_decision = ell.has_value();

    if (ell && *ell == 0) {
        // Zero demands route vacuously; skip the machinery.
        decision = Decision::Yes;
    } else if (strategy == "brute") {
        OracleResult r = brute_force_opt(inst, caps.oracle_budget);
        if (!r.opt)
            throw resource_limit_error("oracle budget exhausted before the value settled");
        value = *r.opt;
        routing = r.routing;
        if (ell) decision = value >= *ell ? Decision::Yes : Decision::No;
    } else if (strategy == "fes") {
        FesSolveResult r = solve_fes(inst, caps);
        value = r.opt;
        routing = r.routing;
        if (ell) decision = value >= *ell ? Decision::Yes : Decision::No;
    } else if (strategy == "colorcode") {
        if (!ell)
            throw input_error("colorcode needs --ell (or an l line in the instance)");
        if (tau == 0) {
            ParamReport params = compute_params(inst.g, caps);
            if (params_col == "-") params_col = params_summary(params);
            tau = derive_tau(inst, params, *ell, caps);
        }
        SolveResult r = solve_with_tau(inst, *ell, tau, opts);
        value = r.best;
        routing = r.routing;
        decision = r.decision;
    } else {
        throw input_error("unknown strategy: " + strategy);
    }

    certify(inst, routing, value, "solve");
    emit_routing(routing, args.routing_out, args.print_routing);

    Report rep;
    rep.add("command", "solve");
    rep.add("file", args.path);
    rep.add("n", inst.g.n());
    rep.add("m", inst.g.m());
    rep.add("k", inst.k());
    rep.add("strategy", strategy);
    rep.add("mode", strategy == "colorcode" ? args.mode : "-");
    rep.add("seed", strategy == "colorcode" ? std::to_string(args.seed) : "-");
    rep.add("ell", ell ? std::to_string(*ell) : "-");
    rep.add("tau", strategy == "colorcode" ? std::to_string(tau) : "-");
    std::string dec = "-";
    if (have_decision)
        dec = decision == Decision::Yes ? "yes" : decision == Decision::No ? "no" : "unknown";
    rep.add("decision", dec);
    rep.add("value", value);
    rep.add("certified", 1);
    rep.add("params", params_col);
    rep.print(ms_since(start));

    if (!have_decision) return kSolved;
    if (decision == Decision::Yes) return kSolved;
    return decision == Decision::No ? kNo : kUnknown;
}

struct ApproxArgs {
    std::string path;
    std::string param = "cvd";
    double epsilon = 0.5;
    std::string routing_out;
    bool print_routing = false;
};

int cmd_approx(const ApproxArgs& args) {
    auto start = Clock::now();
    if (!(args.epsilon > 0.0 && args.epsilon < 1.0))
        throw input_error("--epsilon must lie strictly between 0 and 1");
    Instance inst = parse_instance(read_file(args.path));
    const Caps& caps = default_caps();

    ApproxResult r;
    if (args.param == "cvd")
        r = approx_cvd(inst, args.epsilon, caps);
    else if (args.param == "vi")
        r = approx_vi(inst, args.epsilon, caps);
    else
        r = approx_td(inst, args.epsilon, caps);

    certify(inst, r.routing, r.value, "approx");
    emit_routing(r.routing, args.routing_out, args.print_routing);

    Report rep;
    rep.add("command", "approx");
    rep.add("file", args.path);
    rep.add("n", inst.g.n());
    rep.add("m", inst.g.m());
    rep.add("k", inst.k());
    rep.add("param_kind", args.param);
    rep.add("epsilon", fmt_num(r.epsilon));
    rep.add("param", r.param);
    rep.add("ell_star", r.ell_star);
    rep.add("branch", r.branch);
    rep.add("value", r.value);
    rep.add("certified", 1);
    rep.print(ms_since(start));
    return kSolved;
}

struct GenerateArgs {
    std::string path;
    std::string reduction;
    std::string out;
    std::string witness;
    std::string routing_out;
};

int cmd_generate(const GenerateArgs& args) {
    auto start = Clock::now();
    SourceInstance src = parse_source(read_file(args.path));

    Generated gen;
    if (args.reduction == "pih")
        gen = gen_pih(src);
    else if (args.reduction == "xnlp")
        gen = gen_xnlp(src);
    else
        gen = gen_td(src);

    write_file(args.out, serialize_instance(gen.inst));

    std::string routed = "-";
    if (!args.witness.empty()) {
        std::vector<int> pick = parse_selection(read_file(args.witness), src);
        Routing routing;
        if (args.reduction == "pih")
            routing = witness_pih(src, gen, pick);
        else if (args.reduction == "xnlp")
            routing = witness_xnlp(src, gen, pick);
        else
            routing = witness_td(src, gen, pick);
        certify(gen.inst, routing, *gen.inst.target, "witness");
        write_file(args.routing_out, serialize_routing(routing));
        routed = std::to_string(routing.size());
    }

    Report rep;
    rep.add("command", "generate");
    rep.add("source", args.path);
    rep.add("reduction", args.reduction);
    rep.add("classes", src.classes());
    rep.add("per_class", src.n);
    rep.add("vertices", gen.inst.g.n());
    rep.add("edges", gen.inst.g.m());
    rep.add("demands", gen.inst.k());
    rep.add("target", *gen.inst.target);
    rep.add("witness_routed", routed);
    rep.print(ms_since(start));
    return kSolved;
}

struct ParamsArgs {
    std::string path;
    std::string witness_out;
};

std::string witness_text(const Graph& g, const ParamReport& p) {
    std::ostringstream out;
    auto set_line = [&](const char* name, const ParamResult& r) {
        if (!r.value) return;
        out << "w " << name;
        for (int v : r.witness) out << ' ' << v;
        out << '\n';
    };
    set_line("vc", p.vc);
    set_line("cvd", p.cvd);
    set_line("vi", p.vi);
    set_line("fvs", p.fvs);
    out << "w fes";
    for (auto [u, v] : p.fes.edges) out << ' ' << u << ',' << v;
    out << '\n';
    out << "w td";
    for (int v = 1; v <= g.n(); ++v) out << ' ' << p.td.parent[v];
    out << '\n';
    return out.str();
}

int cmd_params(const ParamsArgs& args) {
    auto start = Clock::now();
    Instance inst = parse_instance(read_file(args.path));
    ParamReport p = compute_params(inst.g, default_caps());

    if (!args.witness_out.empty()) write_file(args.witness_out, witness_text(inst.g, p));

    auto cell = [](const ParamResult& r) { return r.value ? std::to_string(*r.value) : "?"; };
    Report rep;
    rep.add("command", "params");
    rep.add("file", args.path);
    rep.add("n", inst.g.n());
    rep.add("m", inst.g.m());
    rep.add("vc", cell(p.vc));
    rep.add("vc_exact", p.vc.exact ? 1 : 0);
    rep.add("cvd", cell(p.cvd));
    rep.add("cvd_exact", p.cvd.exact ? 1 : 0);
    rep.add("vi", cell(p.vi));
    rep.add("vi_exact", p.vi.exact ? 1 : 0);
    rep.add("fvs", cell(p.fvs));
    rep.add("fvs_exact", p.fvs.exact ? 1 : 0);
    rep.add("fes", p.fes.value);
    rep.add("td", p.td.exact ? std::to_string(p.td.depth) : "?");
    rep.add("td_exact", p.td.exact ? 1 : 0);
    rep.print(ms_since(start));
    return kSolved;
}

struct VerifyArgs {
    std::string instance_path;
    std::string routing_path;
    std::optional<int> ell;
};

int cmd_verify(const VerifyArgs& args) {
    auto start = Clock::now();
    Instance inst = parse_instance(read_file(args.instance_path));
    Routing routing = parse_routing(read_file(args.routing_path));
    Verdict v = verify_routing(inst, routing);

    int need = args.ell ? *args.ell : (inst.target ? *inst.target : 0);
    bool ok = v.ok && v.routed >= need;

    Report rep;
    rep.add("command", "verify");
    rep.add("file", args.instance_path);
    rep.add("routing", args.routing_path);
    rep.add("ok", ok ? 1 : 0);
    rep.add("routed", v.routed);
    rep.add("need", need);
    rep.add("violation", v.ok ? "-" : sanitize(v.violation));
    rep.print(ms_since(start));
    return ok ? kSolved : kNo;
}

struct BenchArgs {
    std::string dir;
    std::string strategies = "fes,brute";
    int jobs = 1;
    std::optional<int> tau;
    std::string mode = "derandomized";
    std::uint64_t seed = 1;
};

struct BenchRow {
    std::string instance, strategy, value;
    double ms = 0;
};

BenchRow bench_one(const std::string& path, const std::string& strategy, const BenchArgs& args,
                   const Caps& caps) {
    BenchRow row;
    row.instance = std::filesystem::path(path).filename().string();
    row.strategy = strategy;
    auto start = Clock::now();
    try {
        Instance inst = parse_instance(read_file(path));
        int value = 0;
        Routing routing;
        if (strategy == "brute") {
            OracleResult r = brute_force_opt(inst, caps.oracle_budget);
            if (!r.opt) throw resource_limit_error("oracle budget");
            value = *r.opt;
            routing = r.routing;
        } else if (strategy == "fes") {
            FesSolveResult r = solve_fes(inst, caps);
            value = r.opt;
            routing = r.routing;
        } else {  // colorcode
            SolveOptions opts;
            opts.mode = parse_mode(args.mode);
            opts.seed = args.seed;
            opts.caps = caps;
            int ell = inst.target ? *inst.target : inst.k();
            int tau = args.tau ? *args.tau : inst.g.n();
            SolveResult r = solve_with_tau(inst, ell, tau, opts);
            value = r.best;
            routing = r.routing;
        }
        certify(inst, routing, value, "bench");
        row.value = std::to_string(value);
    } catch (const resource_limit_error&) {
        row.value = "?";
    }
    row.ms = ms_since(start);
    return row;
}

int cmd_bench(const BenchArgs& args) {
    const Caps& caps = default_caps();

    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(args.dir))
        if (entry.is_regular_file()) files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::vector<std::string> strategies;
    {
        std::stringstream ss(args.strategies);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item != "fes" && item != "brute" && item != "colorcode")
                throw input_error("unknown bench strategy: " + item);
            strategies.push_back(item);
        }
        if (strategies.empty()) throw input_error("--strategies must name at least one strategy");
    }

    std::vector<std::pair<std::string, std::string>> tasks;
    for (const auto& f : files)
        for (const auto& s : strategies) tasks.push_back({f, s});

    std::vector<BenchRow> rows(tasks.size());
    int jobs = std::max(1, args.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            rows[i] = bench_one(tasks[i].first, tasks[i].second, args, caps);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
                rows[i] = bench_one(tasks[i].first, tasks[i].second, args, caps);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.instance, a.strategy) < std::tie(b.instance, b.strategy);
    });

    std::cout << "instance\tstrategy\tvalue\telapsed_ms\n";
    for (const auto& row : rows)
        std::cout << row.instance << '\t' << row.strategy << '\t' << row.value << '\t'
                  << fmt_ms(row.ms) << '\n';
    return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum node-disjoint paths: solve, approximate, generate, measure"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "report format")
        ->check(CLI::IsMember({"tsv", "text"}));

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Exact solve or threshold decision");
    solve->add_option("instance", solve_args.path, "instance file")->required();
    solve->add_option("--strategy", solve_args.strategy)
        ->check(CLI::IsMember({"auto", "colorcode", "fes", "brute"}));
    solve->add_option("--ell", solve_args.ell, "decision threshold (default: instance l line)");
    solve->add_option("--tau", solve_args.tau, "color count for colorcode");
    solve->add_option("--mode", solve_args.mode)
        ->check(CLI::IsMember({"montecarlo", "derandomized", "exhaustive"}));
    solve->add_option("--seed", solve_args.seed);
    solve->add_option("--routing-out", solve_args.routing_out);
    solve->add_flag("--print-routing", solve_args.print_routing);
    solve->add_flag("--serial", solve_args.serial, "use the serial sweep reference");

    ApproxArgs approx_args;
    auto* approx = app.add_subcommand("approx", "(1-eps)-approximation schemes");
    approx->add_option("instance", approx_args.path)->required();
    approx->add_option("--param", approx_args.param)->check(CLI::IsMember({"cvd", "vi", "td"}));
    approx->add_option("--epsilon", approx_args.epsilon)->required();
    approx->add_option("--routing-out", approx_args.routing_out);
    approx->add_flag("--print-routing", approx_args.print_routing);

    GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "Gadget instance generators");
    generate->add_option("source", gen_args.path, "source instance file")->required();
    generate->add_option("--reduction", gen_args.reduction)
        ->required()
        ->check(CLI::IsMember({"pih", "xnlp", "td"}));
    generate->add_option("--out", gen_args.out, "instance output file")->required();
    generate->add_option("--witness", gen_args.witness, "selection file");
    generate->add_option("--routing-out", gen_args.routing_out, "witness routing output file");

    ParamsArgs params_args;
    auto* params = app.add_subcommand("params", "Structural parameter report");
    params->add_option("instance", params_args.path)->required();
    params->add_option("--witness-out", params_args.witness_out);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check a routing against an instance");
    verify->add_option("instance", verify_args.instance_path)->required();
    verify->add_option("routing", verify_args.routing_path)->required();
    verify->add_option("--ell", verify_args.ell, "required routed count");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Sweep a directory of instances");
    bench->add_option("dir", bench_args.dir)->required();
    bench->add_option("--strategies", bench_args.strategies, "comma list: fes,brute,colorcode");
    bench->add_option("--jobs", bench_args.jobs)->check(CLI::PositiveNumber);
    bench->add_option("--tau", bench_args.tau);
    bench->add_option("--mode", bench_args.mode)
        ->check(CLI::IsMember({"montecarlo", "derandomized", "exhaustive"}));
    bench->add_option("--seed", bench_args.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*solve) return cmd_solve(solve_args);
        if (*approx) return cmd_approx(approx_args);
        if (*generate) {
            if (!gen_args.witness.empty() && gen_args.routing_out.empty())
                throw input_error("--witness needs --routing-out for the routing file");
            return cmd_generate(gen_args);
        }
        if (*params) return cmd_params(params_args);
        if (*verify) return cmd_verify(verify_args);
        if (*bench) return cmd_bench(bench_args);
    } catch (const resource_limit_error& e) {
        std::cerr << "unknown: " << e.what() << '\n';
        return kUnknown;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return kUsage;
}
