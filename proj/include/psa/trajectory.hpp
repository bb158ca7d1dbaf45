#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "psa/engine.hpp"

namespace psa {

/// One parsed trajectory row.
struct TrajectoryRow {
    std::size_t step = 0;
    std::size_t individual = 0;
    std::vector<double> position;
    double generation_best_value = 0.0;
};

/// Writes the per-step positions as CSV with header
/// step,individual,x1,...,xd,generation_best_value and one row per
/// (step, individual): max_steps * N data rows. Values are printed in
/// shortest round-trip form, so parsing the file back reproduces them
/// bit-exactly. Throws std::runtime_error on I/O failure.
void emit_trajectory(const RunResult& result, const std::filesystem::path& path);

std::vector<TrajectoryRow> parse_trajectory(const std::filesystem::path& path);

}  // namespace psa
