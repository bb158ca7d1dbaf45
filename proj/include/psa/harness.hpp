#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "psa/config.hpp"
#include "psa/engine.hpp"
#include "psa/objective.hpp"

namespace psa {

/// Per-run digest kept in the experiment report.
struct RunSummary {
    std::size_t run_index = 0;
    std::uint64_t run_seed = 0;
    double best_value = 0.0;
    std::vector<double> best_position;
    bool success = false;
};

/// Element-wise statistics of the best-value traces across runs.
struct ConvergenceSummary {
    std::vector<double> mean;
    std::vector<double> min;
    std::vector<double> max;
};

/// Aggregate statistics over n_runs independent seeded runs.
struct ExperimentReport {
    std::string objective_name;
    std::size_t n_runs = 0;
    double success_tolerance = 0.0;
    std::size_t success_count = 0;
    double success_rate = 0.0;
    double best_over_runs = 0.0;
    double mean_best = 0.0;
    double std_best = 0.0;  ///< sample standard deviation; 0 for a single run
    double median_best = 0.0;
    std::vector<RunSummary> per_run;
    ConvergenceSummary convergence;
    std::uint64_t master_seed = 0;
    PsaConfig config_echo;
};

/// True iff the run's best value lies within `tolerance` of the objective's
/// registered optimum (inclusive). The objective must carry one.
bool is_success(const RunResult& result, const ObjectiveFunction& objective, double tolerance);

/// Element-wise (mean, min, max) of the runs' best-value traces. All traces
/// must have the same length.
ConvergenceSummary convergence_summary(const std::vector<RunResult>& results);

/// n_runs independent run_psa calls; run r uses seed derive_seed(master_seed, r),
/// so raising n_runs never perturbs earlier runs. Runs may execute in
/// parallel; aggregation is ordered by run index, and the report is a pure
/// function of the inputs. Run failures propagate annotated with the lowest
/// failing run index.
ExperimentReport run_experiment(const PsaConfig& config, const ObjectiveFunction& objective,
                                std::size_t n_runs, std::uint64_t master_seed, double tolerance,
                                ExecPolicy policy = ExecPolicy::Parallel);

/// Bundled reference experiment settings, surfaced by the CLI's
/// --paper-michalewicz and --paper-goldstein-price flags: N=20, 40 steps,
/// sigma=0.001, normalized strengths, lambda 0.8 / 0.6.
struct ExperimentPreset {
    std::string objective_name;
    PsaConfig config;
};

ExperimentPreset michalewicz_preset();
ExperimentPreset goldstein_price_preset();

}  // namespace psa
