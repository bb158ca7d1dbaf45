#include "psa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace psa {

bool is_success(const RunResult& result, const ObjectiveFunction& objective, double tolerance) {
    if (!objective.known_optimum()) {
        throw std::invalid_argument("objective '" + objective.name() +
                                    "' has no known optimum; cannot judge success");
    }
    if (!(tolerance >= 0.0)) {
        throw std::invalid_argument("tolerance must be >= 0");
    }
    return result.best_value <= objective.known_optimum()->value + tolerance;
}

ConvergenceSummary convergence_summary(const std::vector<RunResult>& results) {
    if (results.empty()) {
        throw std::invalid_argument("convergence_summary: no runs");
    }
    const std::size_t length = results[0].best_value_trace.size();
    for (const RunResult& r : results) {
        if (r.best_value_trace.size() != length) {
            throw std::invalid_argument("convergence_summary: mixed trace lengths");
        }
    }
    ConvergenceSummary summary;
    summary.mean.resize(length);
    summary.min.resize(length);
    summary.max.resize(length);
    for (std::size_t k = 0; k < length; ++k) {
        double sum = 0.0;
        double lo = results[0].best_value_trace[k];
        double hi = lo;
        for (const RunResult& r : results) {
            const double v = r.best_value_trace[k];
            sum += v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        summary.mean[k] = sum / static_cast<double>(results.size());
        summary.min[k] = lo;
        summary.max[k] = hi;
    }
    return summary;
}

ExperimentReport run_experiment(const PsaConfig& config, const ObjectiveFunction& objective,
                                std::size_t n_runs, std::uint64_t master_seed, double tolerance,
                                ExecPolicy policy) {
    if (n_runs < 1) {
        throw std::invalid_argument("n_runs must be >= 1");
    }
    config.validate();
    if (!objective.known_optimum()) {
        throw std::invalid_argument("objective '" + objective.name() +
                                    "' has no known optimum; cannot compute success statistics");
    }
    if (!(tolerance >= 0.0)) {
        throw std::invalid_argument("tolerance must be >= 0");
    }

    // Runs execute independently on sub-seeded streams; with the parallel
    // policy the per-run kernels stay serial and the parallelism lives here.
    std::vector<RunResult> results(n_runs);
    std::vector<std::string> errors(n_runs);
    std::atomic<bool> failed{false};
    const auto execute_one = [&](std::size_t r) {
        try {
            PsaConfig run_config = config;
            run_config.seed = derive_seed(master_seed, r);
            results[r] = run_psa(run_config, objective, {}, ExecPolicy::Serial);
        } catch (const std::exception& e) {
            errors[r] = e.what();
            failed.store(true);
        }
    };
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t r = 0; r < static_cast<std::int64_t>(n_runs); ++r) {
            execute_one(static_cast<std::size_t>(r));
        }
    } else {
        for (std::size_t r = 0; r < n_runs; ++r) {
            execute_one(r);
        }
    }
    if (failed.load()) {
        for (std::size_t r = 0; r < n_runs; ++r) {
            if (!errors[r].empty()) {
                throw std::runtime_error("run " + std::to_string(r) + ": " + errors[r]);
            }
        }
    }

    ExperimentReport report;
    report.objective_name = objective.name();
    report.n_runs = n_runs;
    report.success_tolerance = tolerance;
    report.master_seed = master_seed;
    report.config_echo = config;

    // aggregation in run-index order, independent of completion order
    std::vector<double> bests(n_runs);
    for (std::size_t r = 0; r < n_runs; ++r) {
        const RunResult& run = results[r];
        const bool success = is_success(run, objective, tolerance);
        report.per_run.push_back({r, run.run_seed, run.best_value, run.best_position, success});
        if (success) report.success_count += 1;
        bests[r] = run.best_value;
    }
    report.success_rate =
        static_cast<double>(report.success_count) / static_cast<double>(n_runs);

    double sum = 0.0;
    double lo = bests[0];
    for (const double v : bests) {
        sum += v;
        lo = std::min(lo, v);
    }
    report.best_over_runs = lo;
    report.mean_best = sum / static_cast<double>(n_runs);

    double sq = 0.0;
    for (const double v : bests) {
        const double dv = v - report.mean_best;
        sq += dv * dv;
    }
    report.std_best =
        n_runs > 1 ? std::sqrt(sq / static_cast<double>(n_runs - 1)) : 0.0;

    std::vector<double> sorted = bests;
    std::sort(sorted.begin(), sorted.end());
    report.median_best = n_runs % 2 == 1
                             ? sorted[n_runs / 2]
                             : 0.5 * (sorted[n_runs / 2 - 1] + sorted[n_runs / 2]);

    report.convergence = convergence_summary(results);
    return report;
}

ExperimentPreset michalewicz_preset() {
    return {"michalewicz",
            PsaConfig::with_uniform_lambda(0.8, 20, 40, 2, 1e-3, 0, StrengthMode::Normalized)};
}

ExperimentPreset goldstein_price_preset() {
    return {"goldstein-price",
            PsaConfig::with_uniform_lambda(0.6, 20, 40, 2, 1e-3, 0, StrengthMode::Normalized)};
}

}  // namespace psa
