#include "psa/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace psa {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    // splitmix64: state advanced (index + 1) times, then finalized.
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double RngStream::next_unit() {
    // top 53 bits scaled by 2^-53; both steps are exact in double
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
}

double RngStream::gaussian(double stddev) {
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
    const double u2 = next_unit();
    return stddev * (std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2));
}

std::vector<double> sample_direction(RngStream& rng, std::size_t dim, double sigma) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("sample_direction: sigma must be > 0");
    }
    std::vector<double> tau(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        tau[j] = rng.gaussian(sigma);
    }
    return tau;
}

Matrix sample_initial_positions(RngStream& rng, std::size_t n, const Bounds& bounds) {
    if (n < 1) {
        throw std::invalid_argument("sample_initial_positions: n must be >= 1");
    }
    bounds.validate();
    const std::size_t d = bounds.dimension();
    Matrix points(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            points(i, j) = rng.uniform(bounds.lower[j], bounds.upper[j]);
        }
    }
    return points;
}

}  // namespace psa
