// psa: derivative-free swarm minimizer with seeded, reproducible runs.
//
// Exit codes: 0 success, 2 usage error, 3 runtime error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psa/engine.hpp"
#include "psa/harness.hpp"
#include "psa/numeric_io.hpp"
#include "psa/report.hpp"
#include "psa/trajectory.hpp"
#include "psa/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct CommonOptions {
    std::string objective;
    std::size_t dim = 2;
    std::size_t n = 20;
    std::size_t steps = 40;
    std::string lambda_spec = "0.8";
    double sigma = 1e-3;
    std::uint64_t seed = 0;
    std::string strength = "normalized";
    bool per_individual_tau = false;
    std::string format = "json";
    bool preset_michalewicz = false;
    bool preset_goldstein_price = false;
};

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--objective", opt.objective,
                    "objective function: michalewicz | goldstein-price | sphere");
    cmd->add_option("--dim", opt.dim, "problem dimension")->capture_default_str();
    cmd->add_option("--n", opt.n, "number of individuals")->capture_default_str();
    cmd->add_option("--steps", opt.steps, "number of steps")->capture_default_str();
    cmd->add_option("--lambda", opt.lambda_spec,
                    "exploration weight in [0,1]: one value, or N comma-separated values")
        ->capture_default_str();
    cmd->add_option("--sigma", opt.sigma, "direction standard deviation (> 0)")
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "64-bit seed (falls back to PSA_SEED, then 0)");
    cmd->add_option("--strength", opt.strength, "strength mapping: raw | normalized")
        ->capture_default_str();
    cmd->add_flag("--per-individual-tau", opt.per_individual_tau,
                  "draw one direction per individual instead of one per step");
    cmd->add_option("--format", opt.format, "report format: json | csv")->capture_default_str();
    cmd->add_flag("--paper-michalewicz", opt.preset_michalewicz,
                  "bundled Michalewicz settings (n=20, steps=40, lambda=0.8, sigma=0.001)");
    cmd->add_flag("--paper-goldstein-price", opt.preset_goldstein_price,
                  "bundled Goldstein-Price settings (n=20, steps=40, lambda=0.6, sigma=0.001)");
}

// Presets fill any field the user did not set explicitly.
void apply_preset(const CLI::App* cmd, CommonOptions& opt) {
    if (opt.preset_michalewicz && opt.preset_goldstein_price) {
        throw std::invalid_argument(
            "--paper-michalewicz and --paper-goldstein-price are mutually exclusive");
    }
    if (!opt.preset_michalewicz && !opt.preset_goldstein_price) return;

    const psa::ExperimentPreset preset =
        opt.preset_michalewicz ? psa::michalewicz_preset() : psa::goldstein_price_preset();
    if (cmd->count("--objective") == 0) opt.objective = preset.objective_name;
    if (cmd->count("--dim") == 0) opt.dim = preset.config.dimension;
    if (cmd->count("--n") == 0) opt.n = preset.config.n_individuals;
    if (cmd->count("--steps") == 0) opt.steps = preset.config.max_steps;
    if (cmd->count("--lambda") == 0) opt.lambda_spec = psa::format_double(preset.config.lambda[0]);
    if (cmd->count("--sigma") == 0) opt.sigma = preset.config.tau_std;
    if (cmd->count("--strength") == 0)
        opt.strength = std::string(psa::to_string(preset.config.strength_mode));
}

std::vector<double> parse_lambda(const std::string& spec, std::size_t n) {
    std::vector<double> values;
    std::size_t begin = 0;
    while (begin <= spec.size()) {
        const std::size_t comma = spec.find(',', begin);
        const std::string token =
            spec.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
        try {
            values.push_back(psa::parse_double(token));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("--lambda: '" + token + "' is not a number");
        }
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (values.size() == 1) {
        values.assign(n, values[0]);
    } else if (values.size() != n) {
        throw std::invalid_argument("--lambda expects one value or exactly --n values (got " +
                                    std::to_string(values.size()) + " for n=" +
                                    std::to_string(n) + ")");
    }
    for (const double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("--lambda values must lie in [0, 1]");
        }
    }
    return values;
}

std::uint64_t resolve_seed(const CLI::App* cmd, const CommonOptions& opt) {
    if (cmd->count("--seed") > 0) return opt.seed;
    if (const char* env = std::getenv("PSA_SEED")) {
        const std::string text(env);
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("PSA_SEED must be an unsigned 64-bit integer, got '" +
                                        text + "'");
        }
    }
    return 0;
}

psa::PsaConfig build_config(const CLI::App* cmd, const CommonOptions& opt) {
    if (opt.objective.empty()) {
        throw std::invalid_argument("--objective is required (or use a preset flag)");
    }
    const std::vector<std::string> names = psa::objective_names();
    if (std::find(names.begin(), names.end(), opt.objective) == names.end()) {
        std::string known;
        for (const std::string& n : names) {
            known += known.empty() ? n : ", " + n;
        }
        throw std::invalid_argument("--objective: unknown objective '" + opt.objective +
                                    "' (expected one of: " + known + ")");
    }
    if (opt.objective == "goldstein-price" && opt.dim != 2) {
        throw std::invalid_argument("--dim: goldstein-price requires dimension 2");
    }
    if (opt.dim < 1) throw std::invalid_argument("--dim must be >= 1");
    if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
    if (opt.steps < 1) throw std::invalid_argument("--steps must be >= 1");
    if (!(opt.sigma > 0.0)) throw std::invalid_argument("--sigma must be > 0");
    if (opt.format != "json" && opt.format != "csv") {
        throw std::invalid_argument("--format must be json or csv");
    }

    psa::PsaConfig config;
    config.n_individuals = opt.n;
    config.max_steps = opt.steps;
    config.dimension = opt.dim;
    config.lambda = parse_lambda(opt.lambda_spec, opt.n);
    config.tau_std = opt.sigma;
    config.seed = resolve_seed(cmd, opt);
    try {
        config.strength_mode = psa::strength_mode_from_string(opt.strength);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("--strength must be raw or normalized");
    }
    config.per_individual_tau = opt.per_individual_tau;
    config.validate();
    return config;
}

int run_command(const CLI::App* cmd, const CommonOptions& opt, const std::string& trajectory_path) {
    const psa::PsaConfig config = build_config(cmd, opt);
    const psa::ObjectiveFunction objective = psa::make_objective(opt.objective, opt.dim);
    const psa::RunResult result = psa::run_psa(config, objective);

    if (!trajectory_path.empty()) {
        psa::emit_trajectory(result, trajectory_path);
    }
    if (opt.format == "csv") {
        std::cout << psa::run_result_to_csv(result);
    } else {
        std::cout << psa::make_report_payload(
                         "run", psa::run_result_to_json(result, trajectory_path))
                         .dump(2)
                  << "\n";
    }
    return kExitOk;
}

int experiment_command(const CLI::App* cmd, const CommonOptions& opt, std::size_t runs,
                       double tolerance) {
    if (runs < 1) throw std::invalid_argument("--runs must be >= 1");
    if (!(tolerance >= 0.0)) throw std::invalid_argument("--tol must be >= 0");
    const psa::PsaConfig config = build_config(cmd, opt);
    const psa::ObjectiveFunction objective = psa::make_objective(opt.objective, opt.dim);
    const psa::ExperimentReport report =
        psa::run_experiment(config, objective, runs, config.seed, tolerance);

    if (opt.format == "csv") {
        std::cout << psa::experiment_report_to_csv(report);
    } else {
        std::cout << psa::make_report_payload("experiment",
                                              psa::experiment_report_to_json(report))
                         .dump(2)
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"psa: swarm minimizer modeled on woodlouse aggregation and exploration"};
    app.set_version_flag("--version", std::string(psa::kVersion));
    app.require_subcommand(1);

    CommonOptions run_opt;
    std::string trajectory_path;
    CLI::App* run_cmd = app.add_subcommand("run", "execute a single seeded run");
    add_common_options(run_cmd, run_opt);
    run_cmd->add_option("--trajectory", trajectory_path,
                        "write the per-step positions to this CSV file");

    CommonOptions exp_opt;
    std::size_t runs = 100;
    double tolerance = 1e-2;
    CLI::App* exp_cmd =
        app.add_subcommand("experiment", "aggregate statistics over many seeded runs");
    add_common_options(exp_cmd, exp_opt);
    exp_cmd->add_option("--runs", runs, "number of independent runs")->capture_default_str();
    exp_cmd->add_option("--tol", tolerance, "success tolerance on the objective value")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            apply_preset(run_cmd, run_opt);
            return run_command(run_cmd, run_opt, trajectory_path);
        }
        apply_preset(exp_cmd, exp_opt);
        return experiment_command(exp_cmd, exp_opt, runs, tolerance);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
