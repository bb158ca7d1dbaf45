#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psa/bounds.hpp"

namespace psa {

/// A registered global optimum, consumed by the harness success predicate.
struct KnownOptimum {
    std::vector<double> position;
    double value = 0.0;
};

/// Evaluatable scalar field over d-dimensional points, minimized by the
/// engine. Bounds, when present, define both the initialization region and
/// the clamping box.
class ObjectiveFunction {
public:
    using EvalFn = std::function<double(std::span<const double>)>;

    ObjectiveFunction(std::string name, std::size_t dimension, EvalFn eval,
                      std::optional<Bounds> bounds = {},
                      std::optional<KnownOptimum> known_optimum = {});

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return dimension_; }
    const std::optional<Bounds>& bounds() const { return bounds_; }
    const std::optional<KnownOptimum>& known_optimum() const { return known_optimum_; }

    double evaluate(std::span<const double> x) const;

private:
    std::string name_;
    std::size_t dimension_ = 0;
    std::optional<Bounds> bounds_;
    std::optional<KnownOptimum> known_optimum_;
    EvalFn eval_;
};

/// -sum_i sin(x_i) * sin(i x_i^2 / pi)^(2m), 1-based i. Steep multimodal
/// landscape, non-positive on [0, pi]^d; each summand lies in [-1, 0] there.
double michalewicz(std::span<const double> x, double m = 10.0);

/// Quartic two-variable polynomial with four local minima; global minimum 3
/// at (0, -1). Defined for dimension 2 only.
double goldstein_price(std::span<const double> x);

/// sum_i x_i^2.
double sphere(std::span<const double> x);

/// Registered on [0, pi]^d; a known optimum is attached for d = 2 with the
/// default steepness m = 10.
ObjectiveFunction make_michalewicz(std::size_t dimension, double m = 10.0);

/// Registered on [-2, 2]^2 with optimum 3 at (0, -1).
ObjectiveFunction make_goldstein_price();

/// Registered on [-5, 5]^d with optimum 0 at the origin.
ObjectiveFunction make_sphere(std::size_t dimension);

/// Lookup by CLI name: "michalewicz", "goldstein-price", or "sphere".
ObjectiveFunction make_objective(std::string_view name, std::size_t dimension);

std::vector<std::string> objective_names();

}  // namespace psa
