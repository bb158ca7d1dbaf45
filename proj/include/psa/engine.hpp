#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psa/config.hpp"
#include "psa/matrix.hpp"
#include "psa/objective.hpp"
#include "psa/rng.hpp"

namespace psa {

/// Raised when the objective produces a non-finite value; the offending
/// position is carried both in the message and as a field.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& message, std::vector<double> position);
    const std::vector<double>& position() const { return position_; }

private:
    std::vector<double> position_;
};

/// Swarm positions at step k plus the best-so-far record and the run's RNG.
struct SwarmState {
    std::size_t step = 0;
    Matrix positions;  // N x d
    std::vector<double> best_position;
    double best_value = std::numeric_limits<double>::infinity();
    RngStream rng;
};

/// Everything recorded about one executed step. `positions` is the
/// post-move, post-clamp snapshot; `generation_best_value` is the minimum
/// over the pre-move positions; `tau` has one row in shared mode and N rows
/// in per-individual mode.
struct StepRecord {
    std::size_t step = 0;
    Matrix positions;
    double generation_best_value = 0.0;
    Matrix tau;
    std::vector<double> strengths;
};

struct GenerationBest {
    std::size_t index = 0;
    std::vector<double> position;
    double value = 0.0;
};

/// p_i = f_i, the untransformed probe fitness. Rejects non-finite input
/// with a domain error naming the offending index.
std::vector<double> raw_strength(std::span<const double> probe_values);

/// Min-max normalization (f_i - min) / (max - min), all outputs in [0, 1]
/// with minimizers at 0 and maximizers at 1. A flat probe landscape
/// (max == min) carries no exploration signal and maps to all zeros.
std::vector<double> normalized_strength(std::span<const double> probe_values);

/// Argmin of `values` with its position; ties go to the lowest index.
GenerationBest generation_best(const Matrix& positions, std::span<const double> values);

/// Starting state for run_psa: validates supplied initial positions
/// (shape and feasibility) or samples them uniformly within the objective's
/// bounds, and seeds the run's stream from config.seed.
SwarmState make_initial_state(const PsaConfig& config, const ObjectiveFunction& objective,
                              std::optional<Matrix> initial_positions = {});

/// One synchronous swarm step:
///   evaluate f at the N current positions and take the generation best;
///   draw the exploration direction(s);
///   evaluate f at the N probe points x_i + tau and map to strengths;
///   move every individual off the same pre-step snapshot,
///     x_i' = (1 - lambda_i) * x*_gen + lambda_i * (x_i + p_i * tau),
///   clamping to bounds when the objective has them;
///   fold all 2N evaluations into the best-so-far record.
/// Exactly 2N objective evaluations per call.
StepRecord psa_step(SwarmState& state, const PsaConfig& config,
                    const ObjectiveFunction& objective,
                    ExecPolicy policy = ExecPolicy::Parallel);

/// One complete run's output.
struct RunResult {
    std::vector<double> best_position;
    double best_value = 0.0;
    std::vector<double> best_value_trace;  ///< best-so-far after each step
    std::vector<StepRecord> trajectory;
    PsaConfig config_echo;
    std::string objective_name;
    std::uint64_t run_seed = 0;
    std::size_t evaluation_count = 0;  ///< always 2 * N * max_steps
};

/// Runs max_steps steps from sampled (or supplied) initial positions.
/// Deterministic given (config.seed, objective, initial_positions).
RunResult run_psa(const PsaConfig& config, const ObjectiveFunction& objective,
                  std::optional<Matrix> initial_positions = {},
                  ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace psa
