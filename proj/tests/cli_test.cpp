#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "psa/engine.hpp"
#include "psa/numeric_io.hpp"
#include "psa/objective.hpp"
#include "psa/trajectory.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("psa_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* cli_binary() {
    if (const char* env = std::getenv("PSA_CLI")) return env;
    return PSA_CLI_PATH;
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;

    std::string cmd = env_prefix.empty() ? "" : env_prefix + " ";
    cmd += std::string(cli_binary()) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());

    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out);
    result.err = read_file(err);
    return result;
}

std::string without_timestamp(const std::string& payload) {
    ordered_json j = ordered_json::parse(payload);
    j["meta"].erase("timestamp");
    return j.dump(2);
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (const char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("cli: single run emits a complete JSON report") {
    const CliResult r = run_cli(
        "run --objective michalewicz --n 20 --steps 40 --lambda 0.8 --sigma 0.001 --seed 7");
    REQUIRE(r.exit_code == 0);

    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["meta"]["tool"] == "psa");
    CHECK(j["meta"]["generator"] == "mt19937_64/u53/box-muller-cos");
    const ordered_json& run = j["run"];
    CHECK(run["objective"] == "michalewicz");
    CHECK(run["best_value"].get<double>() <= 0.0);
    CHECK(run["best_value_trace"].size() == 40);
    CHECK(run["evaluation_count"] == 1600);
    CHECK(run["config"]["seed"] == 7);
    CHECK(run["config"]["n_individuals"] == 20);
    CHECK(run["config"]["lambda"].size() == 20);
    CHECK(run["config"]["lambda"][0] == 0.8);
    CHECK(run["config"]["strength_mode"] == "normalized");
}

TEST_CASE("cli: identical invocations produce identical deterministic payloads") {
    const std::string flags =
        "run --objective goldstein-price --n 10 --steps 20 --lambda 0.6 --seed 11";
    const CliResult a = run_cli(flags);
    const CliResult b = run_cli(flags);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(without_timestamp(a.out) == without_timestamp(b.out));
}

TEST_CASE("cli: usage errors name the offending flag and exit with 2") {
    CliResult r = run_cli("run --objective nope");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--objective") != std::string::npos);

    r = run_cli("run --objective sphere --lambda 1.5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--lambda") != std::string::npos);

    r = run_cli("run --objective sphere --sigma 0");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--sigma") != std::string::npos);

    r = run_cli("run --objective goldstein-price --dim 3");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--dim") != std::string::npos);

    r = run_cli("run --paper-michalewicz --paper-goldstein-price");
    CHECK(r.exit_code == 2);

    r = run_cli("");
    CHECK(r.exit_code == 2);

    r = run_cli("run --objective sphere --lambda 0.5,0.5,0.5");
    CHECK(r.exit_code == 2);  // 3 values for n=20
    CHECK(r.err.find("--lambda") != std::string::npos);
}

TEST_CASE("cli: runtime failures exit with 3") {
    const CliResult r = run_cli(
        "run --objective sphere --trajectory /nonexistent_psa_dir/t.csv");
    CHECK(r.exit_code == 3);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli: help and version exit cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    const CliResult v = run_cli("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("cli: PSA_SEED is the fallback seed and --seed overrides it") {
    const CliResult env_only =
        run_cli("run --objective sphere --n 5 --steps 2", "PSA_SEED=123");
    REQUIRE(env_only.exit_code == 0);
    CHECK(ordered_json::parse(env_only.out)["run"]["config"]["seed"] == 123);

    const CliResult flag_wins =
        run_cli("run --objective sphere --n 5 --steps 2 --seed 5", "PSA_SEED=123");
    REQUIRE(flag_wins.exit_code == 0);
    CHECK(ordered_json::parse(flag_wins.out)["run"]["config"]["seed"] == 5);

    const CliResult bad_env = run_cli("run --objective sphere", "PSA_SEED=oops");
    CHECK(bad_env.exit_code == 2);
    CHECK(bad_env.err.find("PSA_SEED") != std::string::npos);
}

TEST_CASE("cli: per-individual lambda list is accepted") {
    const CliResult r =
        run_cli("run --objective sphere --n 3 --steps 2 --lambda 0.1,0.5,0.9 --seed 1");
    REQUIRE(r.exit_code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["run"]["config"]["lambda"] == ordered_json::array({0.1, 0.5, 0.9}));
}

TEST_CASE("cli: trajectory file has the contracted shape and round-trips") {
    const fs::path traj = scratch_dir() / "traj.csv";
    const std::string flags = "run --objective michalewicz --n 20 --steps 40 --lambda 0.8 "
                              "--sigma 0.001 --seed 7 --trajectory " +
                              traj.string();
    const CliResult r = run_cli(flags);
    REQUIRE(r.exit_code == 0);
    CHECK(ordered_json::parse(r.out)["run"]["trajectory_file"] == traj.string());

    const std::string text = read_file(traj);
    CHECK(count_lines(text) == 801);  // header + 20 * 40 rows

    // re-running the same configuration in-process must reproduce the file's
    // positions bit-for-bit, and the JSON fields must round-trip the doubles
    const psa::PsaConfig config = psa::PsaConfig::with_uniform_lambda(0.8, 20, 40, 2, 1e-3, 7);
    const psa::RunResult rerun = psa::run_psa(config, psa::make_michalewicz(2));
    const ordered_json body = ordered_json::parse(r.out)["run"];
    CHECK(body["best_value"].get<double>() == rerun.best_value);
    for (std::size_t k = 0; k < 40; ++k) {
        CHECK(body["best_value_trace"][k].get<double>() == rerun.best_value_trace[k]);
    }
    const std::vector<psa::TrajectoryRow> rows = psa::parse_trajectory(traj);
    REQUIRE(rows.size() == 800);
    for (std::size_t k = 0; k < 800; ++k) {
        const psa::TrajectoryRow& row = rows[k];
        const psa::StepRecord& record = rerun.trajectory[k / 20];
        CHECK(row.step == record.step);
        CHECK(row.individual == k % 20);
        REQUIRE(row.position.size() == 2);
        CHECK(row.position[0] == record.positions(k % 20, 0));
        CHECK(row.position[1] == record.positions(k % 20, 1));
        CHECK(row.generation_best_value == record.generation_best_value);
    }
}

TEST_CASE("cli: aggregation-only trajectories end on a single shared point") {
    const fs::path traj = scratch_dir() / "collapse.csv";
    const CliResult r = run_cli("run --objective sphere --n 4 --steps 3 --lambda 0 --seed 5 "
                                "--trajectory " +
                                traj.string());
    REQUIRE(r.exit_code == 0);
    const std::vector<psa::TrajectoryRow> rows = psa::parse_trajectory(traj);
    REQUIRE(rows.size() == 12);
    for (std::size_t k = 8; k < 12; ++k) {  // final-step rows
        CHECK(rows[k].position == rows[8].position);
    }
}

TEST_CASE("cli: csv report formats") {
    const CliResult run_csv =
        run_cli("run --objective sphere --n 5 --steps 4 --seed 2 --format csv");
    REQUIRE(run_csv.exit_code == 0);
    CHECK(run_csv.out.rfind("step,best_value\n", 0) == 0);
    CHECK(count_lines(run_csv.out) == 5);

    const CliResult exp_csv = run_cli(
        "experiment --objective sphere --n 5 --steps 4 --runs 3 --seed 2 --format csv");
    REQUIRE(exp_csv.exit_code == 0);
    CHECK(exp_csv.out.rfind("run,seed,best_value,success,x1,x2\n", 0) == 0);
    CHECK(count_lines(exp_csv.out) == 4);

    // identical flags reproduce the bytes exactly
    const CliResult again = run_cli(
        "experiment --objective sphere --n 5 --steps 4 --runs 3 --seed 2 --format csv");
    CHECK(exp_csv.out == again.out);

    // the CSV trace parses back to the same doubles the JSON report carries
    const CliResult run_json = run_cli("run --objective sphere --n 5 --steps 4 --seed 2");
    REQUIRE(run_json.exit_code == 0);
    const ordered_json body = ordered_json::parse(run_json.out)["run"];
    std::istringstream lines(run_csv.out);
    std::string line;
    std::getline(lines, line);  // header
    for (std::size_t k = 0; std::getline(lines, line); ++k) {
        const std::string value = line.substr(line.find(',') + 1);
        CHECK(psa::parse_double(value) == body["best_value_trace"][k].get<double>());
    }
}

TEST_CASE("cli: experiment success accounting matches its tolerance") {
    const CliResult r = run_cli(
        "experiment --objective goldstein-price --runs 10 --lambda 0.6 --seed 1 --tol 1e-2");
    REQUIRE(r.exit_code == 0);
    const ordered_json exp = ordered_json::parse(r.out)["experiment"];
    CHECK(exp["n_runs"] == 10);
    CHECK(exp["success_tolerance"] == 0.01);

    std::size_t successes = 0;
    for (const auto& run : exp["per_run"]) {
        const bool expected = run["best_value"].get<double>() <= 3.0 + 1e-2;
        CHECK(run["success"].get<bool>() == expected);
        if (expected) ++successes;
    }
    CHECK(exp["success_count"] == successes);
    CHECK(exp["success_rate"].get<double>() ==
          static_cast<double>(successes) / 10.0);
    CHECK(exp["convergence"]["mean"].size() == 40);
}

TEST_CASE("cli: presets bundle the reference settings and flags override them") {
    const CliResult mich = run_cli("run --paper-michalewicz --seed 3");
    REQUIRE(mich.exit_code == 0);
    const ordered_json mj = ordered_json::parse(mich.out)["run"];
    CHECK(mj["objective"] == "michalewicz");
    CHECK(mj["config"]["n_individuals"] == 20);
    CHECK(mj["config"]["max_steps"] == 40);
    CHECK(mj["config"]["lambda"][0] == 0.8);
    CHECK(mj["config"]["tau_std"] == 0.001);

    const CliResult gp = run_cli("experiment --paper-goldstein-price --runs 5 --seed 2");
    REQUIRE(gp.exit_code == 0);
    const ordered_json gj = ordered_json::parse(gp.out)["experiment"];
    CHECK(gj["objective"] == "goldstein-price");
    CHECK(gj["config"]["lambda"][0] == 0.6);

    const CliResult overridden = run_cli("run --paper-michalewicz --steps 10 --seed 3");
    REQUIRE(overridden.exit_code == 0);
    CHECK(ordered_json::parse(overridden.out)["run"]["config"]["max_steps"] == 10);
}
