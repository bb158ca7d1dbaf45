#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace psa {

/// Axis-aligned box constraints, lower < upper component-wise.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t dimension() const { return lower.size(); }

    /// Throws std::invalid_argument on mismatched sizes or any interval
    /// with lower[i] >= upper[i].
    void validate() const;

    bool contains(std::span<const double> x) const;
};

/// Component-wise projection onto the box: min(upper_i, max(lower_i, x_i)).
/// Idempotent; identity on feasible points.
std::vector<double> clamp_to_bounds(std::span<const double> x, const Bounds& bounds);

}  // namespace psa
