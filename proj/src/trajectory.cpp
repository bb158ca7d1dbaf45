#include "psa/trajectory.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "psa/numeric_io.hpp"

namespace psa {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

}  // namespace

void emit_trajectory(const RunResult& result, const std::filesystem::path& path) {
    if (result.trajectory.empty()) {
        throw std::invalid_argument("emit_trajectory: result contains no trajectory");
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }

    const std::size_t d = result.config_echo.dimension;
    out << "step,individual";
    for (std::size_t j = 0; j < d; ++j) {
        out << ",x" << (j + 1);
    }
    out << ",generation_best_value\n";

    for (const StepRecord& record : result.trajectory) {
        for (std::size_t i = 0; i < record.positions.rows(); ++i) {
            out << record.step << ',' << i;
            for (const double c : record.positions.row(i)) {
                out << ',' << format_double(c);
            }
            out << ',' << format_double(record.generation_best_value) << '\n';
        }
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

std::vector<TrajectoryRow> parse_trajectory(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("'" + path.string() + "' is empty");
    }
    if (line.rfind("step,individual,", 0) != 0) {
        throw std::runtime_error("'" + path.string() + "' has an unexpected header");
    }

    std::vector<TrajectoryRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() < 4) {
            throw std::runtime_error("'" + path.string() + "' has a malformed row: " + line);
        }
        TrajectoryRow row;
        row.step = static_cast<std::size_t>(std::stoull(fields[0]));
        row.individual = static_cast<std::size_t>(std::stoull(fields[1]));
        for (std::size_t j = 2; j + 1 < fields.size(); ++j) {
            row.position.push_back(parse_double(fields[j]));
        }
        row.generation_best_value = parse_double(fields.back());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace psa
