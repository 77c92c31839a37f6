// Times the coloring sweep's OpenMP kernel against the serial reference on
// identical workloads and insists the results match bit for bit. Pass
// --quick for the small grid used under ctest.
#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "mndp/color_coding.hpp"
#include "mndp/gen.hpp"
#include "mndp/io.hpp"

using namespace mndp;

namespace {

struct Workload {
    std::string name;
    Instance inst;
    int ell = 0;
    int tau = 0;
};

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double run_once(const Workload& w, bool parallel, SolveResult& result) {
    SolveOptions opts;
    opts.mode = SweepMode::MonteCarlo;
    opts.seed = 1;
    opts.parallel = parallel;
    opts.caps.sweep_budget = 8'000'000'000LL;  // bench sets its own ceiling
    double start = now_ms();
    result = solve_with_tau(w.inst, w.ell, w.tau, opts);
    return now_ms() - start;
}

SourceInstance triangle_source(int n) {
    SourceInstance src;
    src.kind = SourceInstance::Kind::DistributedKSubgraph;
    src.k = 3;
    src.n = n;
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
        for (int p = 1; p <= n; ++p)
            src.edges.push_back({{i, p}, {j, (p % n) + 1}});
    return src;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;

    std::vector<Workload> workloads;
    if (quick) {
        workloads.push_back({"random-sparse", random_instance(32, 48, 5, 11), 5, 6});
        workloads.push_back({"random-dense", random_instance(24, 90, 4, 12), 4, 7});
    } else {
        workloads.push_back({"random-sparse", random_instance(48, 72, 6, 11), 6, 8});
        workloads.push_back({"random-dense", random_instance(36, 140, 5, 12), 5, 9});
        workloads.push_back({"pih-gadget", gen_pih(triangle_source(3)).inst, 9, 8});
    }

    std::printf("threads\t%d\n", max_threads());
    std::printf("workload\tn\tm\tk\ttau\tcolorings\tserial_ms\tparallel_ms\tspeedup\tmatch\n");

    bool all_match = true;
    for (const Workload& w : workloads) {
        SolveResult serial, parallel;
        double serial_ms = run_once(w, false, serial);
        double parallel_ms = run_once(w, true, parallel);
        bool match = serial.decision == parallel.decision && serial.best == parallel.best &&
                     serial.routing == parallel.routing &&
                     serial.colorings_tried == parallel.colorings_tried;
        all_match = all_match && match;
        std::printf("%s\t%d\t%d\t%d\t%d\t%lld\t%.2f\t%.2f\t%.2fx\t%s\n", w.name.c_str(),
                    w.inst.g.n(), w.inst.g.m(), w.inst.k(), w.tau,
                    static_cast<long long>(serial.colorings_tried), serial_ms, parallel_ms,
                    serial_ms / parallel_ms, match ? "yes" : "NO");
    }

    if (!all_match) {
        std::fprintf(stderr, "serial and parallel sweeps disagreed\n");
        return 1;
    }
    return 0;
}
