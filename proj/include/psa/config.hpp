#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace psa {

/// How probe fitness maps to the per-individual action strength p.
enum class StrengthMode {
    Raw,         ///< p_i = f(x_i + tau), untransformed
    Normalized,  ///< min-max normalization of the probe values over the swarm
};

std::string_view to_string(StrengthMode mode);
StrengthMode strength_mode_from_string(std::string_view s);

/// Execution backend for the data-parallel loops. Serial is the reference
/// the OpenMP kernels are checked against; both produce bitwise identical
/// results.
enum class ExecPolicy { Serial, Parallel };

/// Full parameterization of one run.
struct PsaConfig {
    std::size_t n_individuals = 20;
    std::size_t max_steps = 40;
    std::size_t dimension = 2;
    /// Per-individual aggregation/exploration weights, one entry per
    /// individual. 0 = pure aggregation, 1 = pure exploration.
    std::vector<double> lambda = std::vector<double>(20, 0.8);
    double tau_std = 1e-3;  ///< exploration step scale, in position units
    std::uint64_t seed = 0;
    StrengthMode strength_mode = StrengthMode::Normalized;
    /// Draw one direction per individual instead of one shared per step.
    bool per_individual_tau = false;

    /// Broadcasts a scalar weight to all n individuals.
    static PsaConfig with_uniform_lambda(double lambda_value, std::size_t n_individuals,
                                         std::size_t max_steps, std::size_t dimension,
                                         double tau_std, std::uint64_t seed,
                                         StrengthMode mode = StrengthMode::Normalized);

    /// Throws std::invalid_argument naming the offending field. Normalized
    /// strengths need at least two individuals; lambda entries must lie in
    /// [0, 1] (the endpoints select the two pure behaviors).
    void validate() const;
};

}  // namespace psa
