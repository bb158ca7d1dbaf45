#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "psa/bounds.hpp"
#include "psa/matrix.hpp"

namespace psa {

/// Identity of the generator and its synthesis transforms, echoed in report
/// metadata. Golden trajectory files depend on every piece of this recipe.
inline constexpr std::string_view kGeneratorId = "mt19937_64/u53/box-muller-cos";

/// Sub-stream seed for run `index`: the (index+1)-th splitmix64 output of a
/// splitmix64 generator seeded with `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

/// Deterministic random stream: raw std::mt19937_64 output mapped through
/// fixed transforms so the draw sequence is identical on every platform.
///
///   next_unit:  (x >> 11) * 2^-53                          -> [0, 1)
///   uniform:    lo + (hi - lo) * next_unit()
///   gaussian:   Box-Muller cosine branch, two raw draws per value:
///               sigma * sqrt(-2 ln(1 - u)) * cos(2 pi v)
class RngStream {
public:
    RngStream() : RngStream(0) {}
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }
    double next_unit();
    double uniform(double lo, double hi);
    double gaussian(double stddev);

    /// Fresh stream for run `index`, seeded with derive_seed(seed(), index).
    /// Derived streams never perturb this one or each other.
    RngStream derive(std::uint64_t index) const { return RngStream(derive_seed(seed_, index)); }

    friend bool operator==(const RngStream& a, const RngStream& b) {
        return a.seed_ == b.seed_ && a.engine_ == b.engine_;
    }

private:
    std::uint64_t seed_ = 0;
    std::mt19937_64 engine_;
};

/// One exploration direction: dim i.i.d. zero-mean Gaussian coordinates with
/// standard deviation sigma (> 0).
std::vector<double> sample_direction(RngStream& rng, std::size_t dim, double sigma);

/// n feasible starting points, each coordinate uniform over its interval.
/// Draw order is row-major: individual 0 coordinate 0, 1, ..., then
/// individual 1.
Matrix sample_initial_positions(RngStream& rng, std::size_t n, const Bounds& bounds);

}  // namespace psa
