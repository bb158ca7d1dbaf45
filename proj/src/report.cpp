#include "psa/report.hpp"

#include <chrono>
#include <ctime>

#include "psa/numeric_io.hpp"
#include "psa/rng.hpp"
#include "psa/version.hpp"

namespace psa {

namespace {

std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

nlohmann::ordered_json config_to_json(const PsaConfig& config) {
    return {
        {"n_individuals", config.n_individuals},
        {"max_steps", config.max_steps},
        {"dimension", config.dimension},
        {"lambda", config.lambda},
        {"tau_std", config.tau_std},
        {"seed", config.seed},
        {"strength_mode", std::string(to_string(config.strength_mode))},
        {"per_individual_tau", config.per_individual_tau},
    };
}

nlohmann::ordered_json run_result_to_json(const RunResult& result,
                                          const std::string& trajectory_file) {
    nlohmann::ordered_json body{
        {"objective", result.objective_name},
        {"run_seed", result.run_seed},
        {"config", config_to_json(result.config_echo)},
        {"best_position", result.best_position},
        {"best_value", result.best_value},
        {"evaluation_count", result.evaluation_count},
        {"best_value_trace", result.best_value_trace},
    };
    if (!trajectory_file.empty()) {
        body["trajectory_file"] = trajectory_file;
    }
    return body;
}

nlohmann::ordered_json experiment_report_to_json(const ExperimentReport& report) {
    nlohmann::ordered_json per_run = nlohmann::ordered_json::array();
    for (const RunSummary& run : report.per_run) {
        per_run.push_back({
            {"run", run.run_index},
            {"seed", run.run_seed},
            {"best_value", run.best_value},
            {"best_position", run.best_position},
            {"success", run.success},
        });
    }
    return {
        {"objective", report.objective_name},
        {"n_runs", report.n_runs},
        {"master_seed", report.master_seed},
        {"success_tolerance", report.success_tolerance},
        {"config", config_to_json(report.config_echo)},
        {"success_count", report.success_count},
        {"success_rate", report.success_rate},
        {"best_over_runs", report.best_over_runs},
        {"mean_best", report.mean_best},
        {"std_best", report.std_best},
        {"median_best", report.median_best},
        {"per_run", std::move(per_run)},
        {"convergence",
         {{"mean", report.convergence.mean},
          {"min", report.convergence.min},
          {"max", report.convergence.max}}},
    };
}

nlohmann::ordered_json make_report_payload(std::string_view section_name,
                                           nlohmann::ordered_json body) {
    nlohmann::ordered_json payload;
    payload["meta"] = {
        {"tool", "psa"},
        {"version", std::string(kVersion)},
        {"generator", std::string(kGeneratorId)},
        {"timestamp", iso8601_utc_now()},
    };
    payload[std::string(section_name)] = std::move(body);
    return payload;
}

std::string run_result_to_csv(const RunResult& result) {
    std::string out = "step,best_value\n";
    for (std::size_t k = 0; k < result.best_value_trace.size(); ++k) {
        out += std::to_string(k + 1);
        out += ',';
        out += format_double(result.best_value_trace[k]);
        out += '\n';
    }
    return out;
}

std::string experiment_report_to_csv(const ExperimentReport& report) {
    std::string out = "run,seed,best_value,success";
    for (std::size_t j = 0; j < report.config_echo.dimension; ++j) {
        out += ",x" + std::to_string(j + 1);
    }
    out += '\n';
    for (const RunSummary& run : report.per_run) {
        out += std::to_string(run.run_index);
        out += ',';
        out += std::to_string(run.run_seed);
        out += ',';
        out += format_double(run.best_value);
        out += ',';
        out += run.success ? '1' : '0';
        for (const double c : run.best_position) {
            out += ',';
            out += format_double(c);
        }
        out += '\n';
    }
    return out;
}

}  // namespace psa
