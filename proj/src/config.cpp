#include "psa/config.hpp"

#include <stdexcept>
#include <string>

namespace psa {

std::string_view to_string(StrengthMode mode) {
    return mode == StrengthMode::Raw ? "raw" : "normalized";
}

StrengthMode strength_mode_from_string(std::string_view s) {
    if (s == "raw") return StrengthMode::Raw;
    if (s == "normalized") return StrengthMode::Normalized;
    throw std::invalid_argument("strength mode must be 'raw' or 'normalized', got '" +
                                std::string(s) + "'");
}

PsaConfig PsaConfig::with_uniform_lambda(double lambda_value, std::size_t n_individuals,
                                         std::size_t max_steps, std::size_t dimension,
                                         double tau_std, std::uint64_t seed, StrengthMode mode) {
    PsaConfig config;
    config.n_individuals = n_individuals;
    config.max_steps = max_steps;
    config.dimension = dimension;
    config.lambda.assign(n_individuals, lambda_value);
    config.tau_std = tau_std;
    config.seed = seed;
    config.strength_mode = mode;
    return config;
}

void PsaConfig::validate() const {
    if (n_individuals < 1) {
        throw std::invalid_argument("n_individuals must be >= 1");
    }
    if (strength_mode == StrengthMode::Normalized && n_individuals < 2) {
        throw std::invalid_argument(
            "n_individuals must be >= 2 with normalized strengths (min-max needs a group)");
    }
    if (max_steps < 1) {
        throw std::invalid_argument("max_steps must be >= 1");
    }
    if (dimension < 1) {
        throw std::invalid_argument("dimension must be >= 1");
    }
    if (!(tau_std > 0.0)) {
        throw std::invalid_argument("tau_std must be > 0");
    }
    if (lambda.size() != n_individuals) {
        throw std::invalid_argument("lambda must carry one weight per individual (got " +
                                    std::to_string(lambda.size()) + ", expected " +
                                    std::to_string(n_individuals) + ")");
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (!(lambda[i] >= 0.0 && lambda[i] <= 1.0)) {
            throw std::invalid_argument("lambda[" + std::to_string(i) + "] must lie in [0, 1]");
        }
    }
}

}  // namespace psa
