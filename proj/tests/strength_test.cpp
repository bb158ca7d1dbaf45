#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "psa/engine.hpp"
#include "psa/objective.hpp"
#include "psa/rng.hpp"

TEST_CASE("normalized_strength maps evenly spaced values affinely") {
    CHECK(psa::normalized_strength(std::vector<double>{2.0, 4.0, 6.0}) ==
          std::vector<double>{0.0, 0.5, 1.0});
}

TEST_CASE("normalized_strength degenerates to zeros on a flat landscape") {
    CHECK(psa::normalized_strength(std::vector<double>{5.0, 5.0, 5.0}) ==
          std::vector<double>{0.0, 0.0, 0.0});
    CHECK(psa::normalized_strength(std::vector<double>{7.0}) == std::vector<double>{0.0});
}

TEST_CASE("normalized_strength rejects empty and non-finite input") {
    CHECK_THROWS_AS(psa::normalized_strength(std::vector<double>{}), std::invalid_argument);

    const std::vector<double> with_nan{1.0, std::numeric_limits<double>::quiet_NaN(), 3.0};
    CHECK_THROWS_WITH_AS(psa::normalized_strength(with_nan),
                         "probe value at index 1 is not finite", std::domain_error);

    const std::vector<double> with_inf{std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(psa::normalized_strength(with_inf), std::domain_error);
    CHECK_THROWS_AS(psa::raw_strength(with_nan), std::domain_error);
}

TEST_CASE("raw_strength is the identity on finite input") {
    CHECK(psa::raw_strength(std::vector<double>{2.0, 4.0, 6.0}) ==
          std::vector<double>{2.0, 4.0, 6.0});
    CHECK(psa::raw_strength(std::vector<double>{0.0}) == std::vector<double>{0.0});
    CHECK(psa::raw_strength(std::vector<double>{-1.8, 0.0}) == std::vector<double>{-1.8, 0.0});
}

TEST_CASE("michalewicz probe strengths match the independent recomputation") {
    // frozen: min-max normalization of f at x_i + tau recomputed externally
    const std::vector<std::vector<double>> positions{
        {2.0, 1.5}, {0.5, 0.5}, {2.2, 1.6}, {1.0, 2.8}, {3.0, 0.2}};
    const std::vector<double> tau{0.0004, -0.0007};

    std::vector<double> probe_values;
    for (const std::vector<double>& x : positions) {
        probe_values.push_back(
            psa::michalewicz(std::vector<double>{x[0] + tau[0], x[1] + tau[1]}));
    }
    const std::vector<double> expected_probes{-1.191220348366827, -4.526209993193983e-17,
                                              -1.768241597269732, -0.15496700375841402,
                                              -7.197957430209397e-13};
    const std::vector<double> expected_strengths{0.32632489236417656, 1.0, 0.0,
                                                 0.9123609556535192, 0.9999999999995929};
    const std::vector<double> strengths = psa::normalized_strength(probe_values);
    REQUIRE(strengths.size() == expected_strengths.size());
    for (std::size_t i = 0; i < strengths.size(); ++i) {
        CHECK(probe_values[i] == doctest::Approx(expected_probes[i]).epsilon(1e-12));
        CHECK(strengths[i] == doctest::Approx(expected_strengths[i]).epsilon(1e-12));
    }
}

TEST_CASE("normalized strengths land in [0,1] with the extremes pinned") {
    psa::RngStream rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0.0, 40.0));
        std::vector<double> values(n);
        for (double& v : values) {
            v = rng.uniform(-1000.0, 1000.0);
        }
        const std::vector<double> p = psa::normalized_strength(values);

        double lo = values[0], hi = values[0];
        std::size_t lo_at = 0, hi_at = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (values[i] < lo) { lo = values[i]; lo_at = i; }
            if (values[i] > hi) { hi = values[i]; hi_at = i; }
        }
        if (hi == lo) continue;

        for (const double v : p) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(p[lo_at] == 0.0);
        CHECK(p[hi_at] == 1.0);
    }
}

TEST_CASE("normalized strengths are invariant under positive affine maps") {
    psa::RngStream rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> values(8);
        for (double& v : values) {
            v = rng.uniform(-50.0, 50.0);
        }
        const double a = rng.uniform(0.001, 100.0);
        const double b = rng.uniform(-1000.0, 1000.0);
        std::vector<double> mapped(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            mapped[i] = a * values[i] + b;
        }
        const std::vector<double> p = psa::normalized_strength(values);
        const std::vector<double> q = psa::normalized_strength(mapped);
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(std::abs(p[i] - q[i]) <= 1e-12);
        }
    }
}
