#include "psa/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <utility>

#include "psa/numeric_io.hpp"

namespace psa {

namespace {

/// Shared driver for the data-parallel loops. Both policies execute the
/// same per-index body, so results are bitwise identical; the serial path
/// doubles as the reference the OpenMP path is tested against.
template <typename Body>
void for_each_index(std::size_t count, ExecPolicy policy, Body&& body) {
    if (policy == ExecPolicy::Parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(psa_for_each_error)
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
    }
}

/// Evaluates f at every row of `points`. Aborts the run on a non-finite
/// value, reporting the offending position.
void evaluate_batch(const ObjectiveFunction& objective, const Matrix& points,
                    std::span<double> out, ExecPolicy policy) {
    for_each_index(points.rows(), policy,
                   [&](std::size_t i) { out[i] = objective.evaluate(points.row(i)); });
    for (std::size_t i = 0; i < points.rows(); ++i) {
        if (!std::isfinite(out[i])) {
            throw EvaluationError("objective '" + objective.name() +
                                      "' returned non-finite value " + format_double(out[i]) +
                                      " at position " + format_point(points.row(i)),
                                  {points.row(i).begin(), points.row(i).end()});
        }
    }
}

void reject_non_finite(std::span<const double> values, const char* label) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::domain_error(std::string(label) + " at index " + std::to_string(i) +
                                    " is not finite");
        }
    }
}

}  // namespace

EvaluationError::EvaluationError(const std::string& message, std::vector<double> position)
    : std::runtime_error(message), position_(std::move(position)) {}

std::vector<double> raw_strength(std::span<const double> probe_values) {
    reject_non_finite(probe_values, "probe value");
    return {probe_values.begin(), probe_values.end()};
}

std::vector<double> normalized_strength(std::span<const double> probe_values) {
    if (probe_values.empty()) {
        throw std::invalid_argument("normalized_strength: empty input");
    }
    reject_non_finite(probe_values, "probe value");
    double lo = probe_values[0];
    double hi = probe_values[0];
    for (const double v : probe_values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::vector<double> strengths(probe_values.size(), 0.0);
    if (hi == lo) {
        return strengths;  // flat landscape: aggregation alone acts
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < probe_values.size(); ++i) {
        strengths[i] = (probe_values[i] - lo) / span;
    }
    return strengths;
}

GenerationBest generation_best(const Matrix& positions, std::span<const double> values) {
    if (positions.rows() == 0 || values.empty()) {
        throw std::invalid_argument("generation_best: empty swarm");
    }
    if (positions.rows() != values.size()) {
        throw std::invalid_argument("generation_best: positions/values size mismatch");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[best]) best = i;  // strict: ties keep the lowest index
    }
    auto row = positions.row(best);
    return {best, {row.begin(), row.end()}, values[best]};
}

SwarmState make_initial_state(const PsaConfig& config, const ObjectiveFunction& objective,
                              std::optional<Matrix> initial_positions) {
    config.validate();
    if (objective.dimension() != config.dimension) {
        throw std::invalid_argument("objective '" + objective.name() + "' has dimension " +
                                    std::to_string(objective.dimension()) +
                                    " but the config says " + std::to_string(config.dimension));
    }

    SwarmState state;
    state.rng = RngStream(config.seed);
    if (initial_positions) {
        Matrix& given = *initial_positions;
        if (given.rows() != config.n_individuals || given.cols() != config.dimension) {
            throw std::invalid_argument("initial positions must be n_individuals x dimension");
        }
        if (objective.bounds()) {
            for (std::size_t i = 0; i < given.rows(); ++i) {
                if (!objective.bounds()->contains(given.row(i))) {
                    throw std::invalid_argument("initial position " + std::to_string(i) +
                                                " at " + format_point(given.row(i)) +
                                                " violates the objective bounds");
                }
            }
        }
        state.positions = std::move(given);
    } else {
        if (!objective.bounds()) {
            throw std::invalid_argument("objective '" + objective.name() +
                                        "' has no bounds; cannot sample initial positions");
        }
        state.positions =
            sample_initial_positions(state.rng, config.n_individuals, *objective.bounds());
    }
    return state;
}

StepRecord psa_step(SwarmState& state, const PsaConfig& config,
                    const ObjectiveFunction& objective, ExecPolicy policy) {
    const std::size_t n = config.n_individuals;
    const std::size_t d = config.dimension;
    if (state.positions.rows() != n || state.positions.cols() != d) {
        throw std::invalid_argument("psa_step: state does not match the config's N x d");
    }

    // current generation: evaluate and pick the aggregation target
    std::vector<double> values(n);
    evaluate_batch(objective, state.positions, values, policy);
    const GenerationBest gen = generation_best(state.positions, values);

    // exploration direction(s): one shared row, or one per individual
    const std::size_t tau_rows = config.per_individual_tau ? n : 1;
    Matrix tau(tau_rows, d);
    for (std::size_t r = 0; r < tau_rows; ++r) {
        const std::vector<double> direction = sample_direction(state.rng, d, config.tau_std);
        std::copy(direction.begin(), direction.end(), tau.row(r).begin());
    }

    // probe the surroundings at x_i + tau
    Matrix probes(n, d);
    for_each_index(n, policy, [&](std::size_t i) {
        const auto tau_row = tau.row(config.per_individual_tau ? i : 0);
        const auto current = state.positions.row(i);
        auto probe = probes.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            probe[j] = current[j] + tau_row[j];
        }
    });
    std::vector<double> probe_values(n);
    evaluate_batch(objective, probes, probe_values, policy);

    std::vector<double> strengths = config.strength_mode == StrengthMode::Normalized
                                        ? normalized_strength(probe_values)
                                        : raw_strength(probe_values);

    // synchronous move off the pre-step snapshot; every individual blends the
    // generation best with its own explored point, then is clamped feasible
    const Bounds* bounds = objective.bounds() ? &*objective.bounds() : nullptr;
    Matrix next(n, d);
    for_each_index(n, policy, [&](std::size_t i) {
        const double lambda = config.lambda[i];
        const double p = strengths[i];
        const auto tau_row = tau.row(config.per_individual_tau ? i : 0);
        const auto current = state.positions.row(i);
        auto out = next.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            const double explored = current[j] + p * tau_row[j];
            double moved = (1.0 - lambda) * gen.position[j] + lambda * explored;
            if (bounds) {
                moved = std::min(bounds->upper[j], std::max(bounds->lower[j], moved));
            }
            out[j] = moved;
        }
    });

    // fold this step's 2N evaluations into best-so-far; position evaluations
    // first, strict < keeps the earliest on ties
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] < state.best_value) {
            state.best_value = values[i];
            const auto row = state.positions.row(i);
            state.best_position.assign(row.begin(), row.end());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (probe_values[i] < state.best_value) {
            state.best_value = probe_values[i];
            const auto row = probes.row(i);
            state.best_position.assign(row.begin(), row.end());
        }
    }

    state.positions = std::move(next);
    state.step += 1;

    StepRecord record;
    record.step = state.step;
    record.positions = state.positions;
    record.generation_best_value = gen.value;
    record.tau = std::move(tau);
    record.strengths = std::move(strengths);
    return record;
}

RunResult run_psa(const PsaConfig& config, const ObjectiveFunction& objective,
                  std::optional<Matrix> initial_positions, ExecPolicy policy) {
    SwarmState state = make_initial_state(config, objective, std::move(initial_positions));

    RunResult result;
    result.trajectory.reserve(config.max_steps);
    result.best_value_trace.reserve(config.max_steps);
    for (std::size_t k = 0; k < config.max_steps; ++k) {
        result.trajectory.push_back(psa_step(state, config, objective, policy));
        result.best_value_trace.push_back(state.best_value);
    }

    result.best_position = state.best_position;
    result.best_value = state.best_value;
    result.config_echo = config;
    result.objective_name = objective.name();
    result.run_seed = config.seed;
    result.evaluation_count = 2 * config.n_individuals * config.max_steps;
    return result;
}

}  // namespace psa
