#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "psa/engine.hpp"
#include "psa/harness.hpp"

namespace psa {

nlohmann::ordered_json config_to_json(const PsaConfig& config);

nlohmann::ordered_json run_result_to_json(const RunResult& result,
                                          const std::string& trajectory_file = "");

nlohmann::ordered_json experiment_report_to_json(const ExperimentReport& report);

/// Wraps a report section as {"meta": {...}, section_name: body}. meta's
/// timestamp is the only field that varies between identical invocations;
/// everything else is deterministic.
nlohmann::ordered_json make_report_payload(std::string_view section_name,
                                           nlohmann::ordered_json body);

/// Best-value trace as CSV: step,best_value.
std::string run_result_to_csv(const RunResult& result);

/// Per-run summaries as CSV: run,seed,best_value,success,x1..xd.
std::string experiment_report_to_csv(const ExperimentReport& report);

}  // namespace psa
