#include "psa/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace psa {

void Bounds::validate() const {
    if (lower.empty() || lower.size() != upper.size()) {
        throw std::invalid_argument("bounds: lower and upper must be non-empty and equal-sized");
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!(lower[j] < upper[j])) {
            throw std::invalid_argument("bounds: lower[" + std::to_string(j) +
                                        "] must be strictly below upper[" + std::to_string(j) + "]");
        }
    }
}

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < lower[j] || x[j] > upper[j]) return false;
    }
    return true;
}

std::vector<double> clamp_to_bounds(std::span<const double> x, const Bounds& bounds) {
    bounds.validate();
    if (x.size() != bounds.dimension()) {
        throw std::invalid_argument("clamp_to_bounds: point dimension does not match bounds");
    }
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = std::min(bounds.upper[j], std::max(bounds.lower[j], x[j]));
    }
    return out;
}

ObjectiveFunction::ObjectiveFunction(std::string name, std::size_t dimension, EvalFn eval,
                                     std::optional<Bounds> bounds,
                                     std::optional<KnownOptimum> known_optimum)
    : name_(std::move(name)),
      dimension_(dimension),
      bounds_(std::move(bounds)),
      known_optimum_(std::move(known_optimum)),
      eval_(std::move(eval)) {
    if (dimension_ < 1) {
        throw std::invalid_argument("objective '" + name_ + "': dimension must be >= 1");
    }
    if (bounds_) {
        bounds_->validate();
        if (bounds_->dimension() != dimension_) {
            throw std::invalid_argument("objective '" + name_ + "': bounds dimension mismatch");
        }
    }
}

double ObjectiveFunction::evaluate(std::span<const double> x) const {
    if (x.size() != dimension_) {
        throw std::invalid_argument("objective '" + name_ + "' expects dimension " +
                                    std::to_string(dimension_) + ", got " +
                                    std::to_string(x.size()));
    }
    return eval_(x);
}

double michalewicz(std::span<const double> x, double m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        const double s = std::sin(static_cast<double>(i + 1) * xi * xi / std::numbers::pi);
        sum += std::sin(xi) * std::pow(s, 2.0 * m);
    }
    return -sum;
}

double goldstein_price(std::span<const double> x) {
    if (x.size() != 2) {
        throw std::invalid_argument("goldstein-price is defined for dimension 2 only");
    }
    const double x1 = x[0];
    const double x2 = x[1];
    const double a = x1 + x2 + 1.0;
    const double f1 = 1.0 + a * a * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                                     6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double b = 2.0 * x1 - 3.0 * x2;
    const double f2 = 30.0 + b * b * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                      36.0 * x1 * x2 + 27.0 * x2 * x2);
    return f1 * f2;
}

double sphere(std::span<const double> x) {
    double sum = 0.0;
    for (const double xi : x) {
        sum += xi * xi;
    }
    return sum;
}

ObjectiveFunction make_michalewicz(std::size_t dimension, double m) {
    if (!(m > 0.0)) {
        throw std::invalid_argument("michalewicz: steepness m must be > 0");
    }
    Bounds bounds{std::vector<double>(dimension, 0.0),
                  std::vector<double>(dimension, std::numbers::pi)};
    std::optional<KnownOptimum> optimum;
    if (dimension == 2 && m == 10.0) {
        optimum = KnownOptimum{{2.2029055173080243, 1.5707963237831148}, -1.8013034100985532};
    }
    return ObjectiveFunction(
        "michalewicz", dimension,
        [m](std::span<const double> x) { return michalewicz(x, m); },
        std::move(bounds), std::move(optimum));
}

ObjectiveFunction make_goldstein_price() {
    Bounds bounds{{-2.0, -2.0}, {2.0, 2.0}};
    return ObjectiveFunction(
        "goldstein-price", 2,
        [](std::span<const double> x) { return goldstein_price(x); },
        std::move(bounds), KnownOptimum{{0.0, -1.0}, 3.0});
}

ObjectiveFunction make_sphere(std::size_t dimension) {
    Bounds bounds{std::vector<double>(dimension, -5.0), std::vector<double>(dimension, 5.0)};
    return ObjectiveFunction(
        "sphere", dimension,
        [](std::span<const double> x) { return sphere(x); },
        std::move(bounds), KnownOptimum{std::vector<double>(dimension, 0.0), 0.0});
}

ObjectiveFunction make_objective(std::string_view name, std::size_t dimension) {
    if (name == "michalewicz") {
        return make_michalewicz(dimension);
    }
    if (name == "goldstein-price") {
        if (dimension != 2) {
            throw std::invalid_argument("goldstein-price requires dimension 2, got " +
                                        std::to_string(dimension));
        }
        return make_goldstein_price();
    }
    if (name == "sphere") {
        return make_sphere(dimension);
    }
    throw std::invalid_argument("unknown objective '" + std::string(name) +
                                "' (expected michalewicz, goldstein-price, or sphere)");
}

std::vector<std::string> objective_names() {
    return {"michalewicz", "goldstein-price", "sphere"};
}

}  // namespace psa
