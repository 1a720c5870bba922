// f1bench: calibration, analytic tables, season simulation and benchmarking
// of finishing positions under the elite / non-elite normal model.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "f1bench/commands.hpp"

namespace {

using namespace f1bench;

struct RawFlags {
    std::string seed;
    std::int64_t sims = 1'000'000;
    std::int64_t races_full = 24;
    std::int64_t races_sprint = 6;
    std::int64_t workers = 1;
    std::string format = "csv";
    std::string scenario = "baseline";
    std::vector<std::string> categories;
    bool rookie = false;
    std::string results_path;
    std::string json_path;
    std::string cache_dir;
    std::string manifest_path;
};

void add_common(CLI::App* cmd, RawFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Master seed (default $F1BENCH_SEED or 20251207)");
    cmd->add_option("--sims", flags.sims, "Number of simulated seasons")->capture_default_str();
    cmd->add_option("--races-full", flags.races_full, "Full races per season")->capture_default_str();
    cmd->add_option("--races-sprint", flags.races_sprint, "Sprint races per season")->capture_default_str();
    cmd->add_option("--format", flags.format, "Output format: csv, json or md")->capture_default_str();
    cmd->add_option("--scenario", flags.scenario, "baseline, dominant or rookie")->capture_default_str();
    cmd->add_option("--workers", flags.workers, "Simulation threads; results do not depend on it")
        ->capture_default_str();
    cmd->add_option("--manifest", flags.manifest_path, "Write the run manifest here instead of stderr");
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunOptions resolve(const std::string& subcommand, const RawFlags& flags) {
    RunOptions o;
    o.subcommand = subcommand;
    if (flags.seed.empty()) {
        o.config.master_seed = default_seed();
    } else if (auto seed = parse_seed(flags.seed)) {
        o.config.master_seed = *seed;
    } else {
        throw std::invalid_argument("--seed must be an unsigned 64-bit integer, got '" + flags.seed + "'");
    }
    if (flags.sims < 1) throw std::invalid_argument("--sims must be positive");
    if (flags.races_full < 0 || flags.races_sprint < 0) throw std::invalid_argument("race counts must be >= 0");
    if (flags.races_full > 1000 || flags.races_sprint > 1000) throw std::invalid_argument("race counts above 1000");
    if (flags.workers < 1 || flags.workers > 1024) throw std::invalid_argument("--workers must lie in 1..1024");
    o.config.n_sims = static_cast<std::uint64_t>(flags.sims);
    o.config.races_full = static_cast<int>(flags.races_full);
    o.config.races_sprint = static_cast<int>(flags.races_sprint);
    o.config.scenario = parse_scenario(flags.scenario);
    o.format = parse_format(flags.format);
    o.workers = static_cast<unsigned>(flags.workers);
    o.rookie = flags.rookie;
    for (const auto& c : flags.categories) o.categories.push_back(parse_category(c));
    o.results_path = flags.results_path;
    o.json_path = flags.json_path;
    o.cache_dir = flags.cache_dir;
    return o;
}

void emit_manifest(const RunOptions& options, const std::string& path) {
    const auto manifest = to_json(make_manifest(options, utc_timestamp()));
    if (path.empty()) {
        std::cerr << "manifest: " << manifest.dump() << '\n';
    } else {
        std::ofstream(path) << manifest.dump(2) << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark motorsport season results against a normal finishing-position model"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    RawFlags flags;
    auto* calibrate = app.add_subcommand("calibrate", "Print model parameters and defining-equation residuals");
    auto* probs = app.add_subcommand("probs", "Print analytic finishing-position probabilities");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo season points: means and 95% intervals");
    auto* benchmark = app.add_subcommand("benchmark", "Classify actual season results against the intervals");
    auto* replay = app.add_subcommand("replay", "Rerun a command from a saved manifest");

    for (auto* cmd : {calibrate, probs, simulate, benchmark}) add_common(cmd, flags);
    for (auto* cmd : {simulate, benchmark}) {
        cmd->add_flag("--rookie", flags.rookie, "Halve the elite-driver benchmark for a first-season driver");
        cmd->add_option("--cache-dir", flags.cache_dir, "Directory for cached simulation summaries");
    }
    simulate->add_option("--category", flags.categories,
                         "Restrict to elite_driver, elite_team, nonelite_driver, nonelite_team");
    benchmark->add_option("results", flags.results_path, "Results CSV (name,team,class,points,entity)")->required();
    benchmark->add_option("--json-out", flags.json_path, "Also write JSON verdicts to this file");
    std::string replay_path;
    replay->add_option("manifest", replay_path, "Manifest JSON written by an earlier run")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    RunOptions options;
    try {
        if (replay->parsed()) {
            std::ifstream in(replay_path);
            if (!in) {
                std::cerr << "error: cannot open manifest '" << replay_path << "'\n";
                return kExitValidation;
            }
            options = manifest_from_json(nlohmann::json::parse(in)).options;
        } else {
            options = resolve(app.get_subcommands().front()->get_name(), flags);
            emit_manifest(options, flags.manifest_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return run_command(options, std::cout, std::cerr);
}
