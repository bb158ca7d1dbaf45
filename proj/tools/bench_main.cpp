// Compares the serial reference against the OpenMP kernels: run-level
// parallelism for experiments, swarm-level parallelism for single runs.
// Results are required to match bitwise; timings are best-of-repeats.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "psa/engine.hpp"
#include "psa/harness.hpp"
#include "psa/objective.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_best_of(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = Clock::now();
        fn();
        const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

void bench_run(const std::string& objective_name, std::size_t n, std::size_t dim,
               std::size_t steps, int repeats) {
    const psa::ObjectiveFunction objective = psa::make_objective(objective_name, dim);
    const psa::PsaConfig config =
        psa::PsaConfig::with_uniform_lambda(0.8, n, steps, dim, 1e-3, 1);

    psa::RunResult serial;
    psa::RunResult parallel;
    const double t_serial = time_best_of(
        repeats, [&] { serial = psa::run_psa(config, objective, {}, psa::ExecPolicy::Serial); });
    const double t_parallel = time_best_of(repeats, [&] {
        parallel = psa::run_psa(config, objective, {}, psa::ExecPolicy::Parallel);
    });

    const bool match = serial.best_value == parallel.best_value &&
                       serial.best_value_trace == parallel.best_value_trace &&
                       serial.trajectory.back().positions == parallel.trajectory.back().positions;
    std::printf("%-14s run        N=%-6zu d=%-4zu steps=%-4zu %10.2f %10.2f %8.2fx   %s\n",
                objective_name.c_str(), n, dim, steps, t_serial, t_parallel,
                t_serial / t_parallel, match ? "ok" : "MISMATCH");
}

void bench_experiment(std::size_t runs, int repeats) {
    const psa::ExperimentPreset preset = psa::michalewicz_preset();
    const psa::ObjectiveFunction objective =
        psa::make_objective(preset.objective_name, preset.config.dimension);

    psa::ExperimentReport serial;
    psa::ExperimentReport parallel;
    const double t_serial = time_best_of(repeats, [&] {
        serial = psa::run_experiment(preset.config, objective, runs, 1, 1e-2,
                                     psa::ExecPolicy::Serial);
    });
    const double t_parallel = time_best_of(repeats, [&] {
        parallel = psa::run_experiment(preset.config, objective, runs, 1, 1e-2,
                                       psa::ExecPolicy::Parallel);
    });

    bool match = serial.success_count == parallel.success_count &&
                 serial.mean_best == parallel.mean_best &&
                 serial.median_best == parallel.median_best;
    for (std::size_t r = 0; match && r < runs; ++r) {
        match = serial.per_run[r].best_value == parallel.per_run[r].best_value;
    }
    std::printf("%-14s experiment runs=%-4zu (N=20 d=2 steps=40)  %10.2f %10.2f %8.2fx   %s\n",
                preset.objective_name.c_str(), runs, t_serial, t_parallel,
                t_serial / t_parallel, match ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int repeats = 5;
    if (argc > 1) repeats = std::max(1, std::atoi(argv[1]));

#ifdef _OPENMP
    std::printf("OpenMP threads: %d, repeats per row: %d\n", omp_get_max_threads(), repeats);
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-14s %-38s %10s %10s %9s\n", "objective", "workload", "serial", "openmp",
                "speedup");
    std::printf("%-14s %-38s %10s %10s %9s\n", "", "", "(ms)", "(ms)", "");

    bench_run("michalewicz", 512, 8, 50, repeats);
    bench_run("michalewicz", 4096, 16, 20, repeats);
    bench_run("sphere", 8192, 64, 20, repeats);
    bench_run("goldstein-price", 16384, 2, 20, repeats);
    bench_experiment(256, repeats);
    return 0;
}
