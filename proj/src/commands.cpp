#include "f1bench/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include "f1bench/analytic_probs.hpp"
#include "f1bench/benchmark.hpp"

namespace f1bench {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kResidualTolerance = 1e-9;

// Rejects the rookie flag outside the baseline scenario.
Scenario simulated_scenario(const RunOptions& options) {
    const Scenario s = options.config.scenario;
    if (options.rookie && s == Scenario::dominant_manufacturer) {
        throw std::invalid_argument("--rookie applies to the baseline scenario only");
    }
    return s == Scenario::rookie ? Scenario::baseline : s;
}

bool wants_rookie(const RunOptions& options) {
    return options.rookie || options.config.scenario == Scenario::rookie;
}

SeasonConfig simulation_config(const RunOptions& options) {
    SeasonConfig c = options.config;
    c.scenario = simulated_scenario(options);
    c.validate();
    return c;
}

ordered_json summary_to_json(const SimulationSummary& s) {
    return {{"category", to_string(s.category)}, {"scenario", to_string(s.scenario)},
            {"mean_points", s.mean_points},     {"ci_low", s.ci_low},
            {"ci_high", s.ci_high},             {"n_sims", s.n_sims}};
}

SimulationSummary summary_from_json(const json& j) {
    SimulationSummary s;
    s.category = parse_category(j.at("category").get<std::string>());
    s.scenario = parse_scenario(j.at("scenario").get<std::string>());
    s.mean_points = j.at("mean_points").get<double>();
    s.ci_low = j.at("ci_low").get<double>();
    s.ci_high = j.at("ci_high").get<double>();
    s.n_sims = j.at("n_sims").get<std::uint64_t>();
    return s;
}

bool summary_consistent(const SimulationSummary& s) {
    return std::isfinite(s.mean_points) && s.ci_low <= s.mean_points && s.mean_points <= s.ci_high;
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const IngestError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

} // namespace

std::optional<std::uint64_t> parse_seed(std::string_view text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnvVar)) {
        if (auto seed = parse_seed(env)) return *seed;
    }
    return kDefaultSeed;
}

RunManifest make_manifest(const RunOptions& options, std::string timestamp) {
    RunManifest m;
    m.options = options;
    m.params = make_params(options.config.scenario);
    m.timestamp = std::move(timestamp);
    return m;
}

ordered_json to_json(const RunManifest& m) {
    const RunOptions& o = m.options;
    ordered_json categories = ordered_json::array();
    for (Category c : o.categories) categories.push_back(to_string(c));
    return {
        {"subcommand", o.subcommand},
        {"config",
         {{"races_full", o.config.races_full},
          {"races_sprint", o.config.races_sprint},
          {"n_sims", o.config.n_sims},
          {"master_seed", o.config.master_seed},
          {"scenario", to_string(o.config.scenario)}}},
        {"format", to_string(o.format)},
        {"workers", o.workers},
        {"rookie", o.rookie},
        {"categories", categories},
        {"results_path", o.results_path},
        {"json_path", o.json_path},
        {"cache_dir", o.cache_dir},
        {"params",
         {{"mu_elite", m.params.mu_elite},
          {"mu_nonelite", m.params.mu_nonelite},
          {"sigma_elite", m.params.sigma_elite},
          {"sigma_nonelite", m.params.sigma_nonelite},
          {"cov_elite_pair", m.params.cov_elite_pair},
          {"cov_nonelite_pair", m.params.cov_nonelite_pair},
          {"z_table_limit", m.params.z_table_limit}}},
        {"tool_version", m.tool_version},
        {"timestamp", m.timestamp},
    };
}

RunManifest manifest_from_json(const json& j) {
    RunManifest m;
    RunOptions& o = m.options;
    o.subcommand = j.at("subcommand").get<std::string>();
    const json& c = j.at("config");
    o.config.races_full = c.at("races_full").get<int>();
    o.config.races_sprint = c.at("races_sprint").get<int>();
    o.config.n_sims = c.at("n_sims").get<std::uint64_t>();
    o.config.master_seed = c.at("master_seed").get<std::uint64_t>();
    o.config.scenario = parse_scenario(c.at("scenario").get<std::string>());
    o.format = parse_format(j.at("format").get<std::string>());
    o.workers = j.value("workers", 1u);
    o.rookie = j.value("rookie", false);
    for (const auto& name : j.value("categories", json::array())) {
        o.categories.push_back(parse_category(name.get<std::string>()));
    }
    o.results_path = j.value("results_path", std::string{});
    o.json_path = j.value("json_path", std::string{});
    o.cache_dir = j.value("cache_dir", std::string{});
    m.params = make_params(o.config.scenario);
    m.tool_version = j.value("tool_version", std::string{kToolVersion});
    m.timestamp = j.value("timestamp", std::string{});
    return m;
}

std::string cache_file(const std::string& dir, const SeasonConfig& config) {
    const std::string name = "summaries_seed" + std::to_string(config.master_seed) + "_n" +
                             std::to_string(config.n_sims) + "_" + std::string(to_string(config.scenario)) + "_f" +
                             std::to_string(config.races_full) + "_s" + std::to_string(config.races_sprint) +
                             ".json";
    return (std::filesystem::path(dir) / name).string();
}

std::vector<SimulationSummary> load_or_simulate(const RunOptions& options, const std::vector<Category>& categories,
                                                std::ostream& err) {
    const SeasonConfig config = simulation_config(options);
    std::map<Category, SimulationSummary> known;
    std::string path;
    if (!options.cache_dir.empty()) {
        path = cache_file(options.cache_dir, config);
        if (std::ifstream in{path}) {
            try {
                const json cached = json::parse(in);
                for (const auto& entry : cached.at("summaries")) {
                    const SimulationSummary s = summary_from_json(entry);
                    known[s.category] = s;
                }
            } catch (const std::exception& e) {
                err << "warning: ignoring unreadable cache " << path << ": " << e.what() << '\n';
                known.clear();
            }
        }
    }

    bool updated = false;
    std::vector<SimulationSummary> out;
    for (Category c : categories) {
        auto it = known.find(c);
        if (it == known.end()) {
            it = known.emplace(c, summarize(c, config, options.workers)).first;
            updated = true;
        }
        out.push_back(it->second);
    }

    if (updated && !path.empty()) {
        std::filesystem::create_directories(options.cache_dir);
        ordered_json j;
        j["key"] = {{"master_seed", config.master_seed},
                    {"n_sims", config.n_sims},
                    {"scenario", to_string(config.scenario)},
                    {"races_full", config.races_full},
                    {"races_sprint", config.races_sprint}};
        j["summaries"] = ordered_json::array();
        for (const auto& [category, s] : known) j["summaries"].push_back(summary_to_json(s));
        std::ofstream(path) << j.dump(2) << '\n';
    }
    return out;
}

int cmd_calibrate(const RunOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ModelParams params = make_params(options.config.scenario);
        out << render_calibration(params, options.config.scenario, options.format);
        const double worst = residuals(params).max_abs();
        if (!(worst <= kResidualTolerance)) {
            err << "self-check failed: calibration residual " << worst << " exceeds " << kResidualTolerance << '\n';
            return static_cast<int>(kExitNumeric);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_probs(const RunOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        options.config.validate();
        const ModelParams params = make_params(options.config.scenario);
        for (DriverClass cls : {DriverClass::elite, DriverClass::nonelite}) {
            const PositionDistribution dist = position_distribution(params, cls);
            double total = 0.0;
            for (double p : dist) total += p;
            if (std::abs(total - 1.0) > kResidualTolerance) {
                err << "self-check failed: " << to_string(cls) << " position probabilities sum to " << total << '\n';
                return static_cast<int>(kExitNumeric);
            }
            for (Aggregate kind : {Aggregate::podium, Aggregate::top8, Aggregate::top10}) {
                double partial = 0.0;
                for (int k = 0; k < last_position(kind); ++k) partial += dist[static_cast<std::size_t>(k)];
                if (std::abs(partial - aggregate_probability(params, cls, kind)) > kResidualTolerance) {
                    err << "self-check failed: aggregate mismatch for " << to_string(cls) << '\n';
                    return static_cast<int>(kExitNumeric);
                }
            }
        }
        out << render_probabilities(params, options.config, options.format);
        return static_cast<int>(kExitOk);
    });
}

int cmd_simulate(const RunOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<Category> categories = options.categories;
        if (categories.empty()) categories.assign(std::begin(kAllCategories), std::end(kAllCategories));
        const bool rookie = wants_rookie(options);
        const bool has_elite_driver =
            std::find(categories.begin(), categories.end(), Category::elite_driver) != categories.end();
        if (rookie && !has_elite_driver) categories.insert(categories.begin(), Category::elite_driver);

        std::vector<SimulationSummary> rows = load_or_simulate(options, categories, err);
        if (rookie) {
            for (const auto& s : std::vector<SimulationSummary>(rows)) {
                if (s.category == Category::elite_driver) rows.push_back(rookie_benchmark(s));
            }
        }
        for (const auto& s : rows) {
            if (!summary_consistent(s)) {
                err << "self-check failed: inconsistent summary for " << to_string(s.category) << '\n';
                return static_cast<int>(kExitNumeric);
            }
        }
        out << render_summaries(rows, options.format);
        return static_cast<int>(kExitOk);
    });
}

int cmd_benchmark(const RunOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (options.results_path.empty()) {
            throw std::invalid_argument("benchmark needs a results CSV path");
        }
        std::ifstream in(options.results_path);
        if (!in) {
            throw std::invalid_argument("cannot open results file '" + options.results_path + "'");
        }
        std::vector<SeasonRecord> records = ingest_results(in);

        std::vector<SeasonRecord> drivers;
        std::map<std::string, double> team_points;
        bool has_teams = false;
        for (const auto& r : records) {
            if (r.entity == Entity::driver) drivers.push_back(r);
            else {
                has_teams = true;
                team_points[r.entrant_name] = r.points;
            }
        }
        if (!has_teams) {
            for (auto& team : aggregate_teams(drivers)) records.push_back(std::move(team));
        } else if (!drivers.empty()) {
            for (const auto& team : aggregate_teams(drivers)) {
                const auto it = team_points.find(team.entrant_name);
                if (it == team_points.end()) {
                    err << "warning: no team row for '" << team.entrant_name << "'\n";
                } else if (it->second != team.points) {
                    err << "warning: team '" << team.entrant_name << "' lists " << format_exact(it->second)
                        << " points but its drivers sum to " << format_exact(team.points) << '\n';
                }
            }
        }

        std::vector<Category> needed;
        for (const auto& r : records) {
            if (std::find(needed.begin(), needed.end(), r.category()) == needed.end()) needed.push_back(r.category());
        }
        BenchmarkSet benchmarks;
        for (const auto& s : load_or_simulate(options, needed, err)) benchmarks[s.category] = s;
        if (wants_rookie(options) && benchmarks.contains(Category::elite_driver)) {
            benchmarks[Category::elite_driver] = rookie_benchmark(benchmarks[Category::elite_driver]);
        }

        const std::vector<Verdict> verdicts = classify_season(records, benchmarks);
        out << render_verdicts(verdicts, options.format);
        if (!options.json_path.empty()) {
            std::ofstream json_out(options.json_path);
            if (!json_out) throw std::invalid_argument("cannot write '" + options.json_path + "'");
            json_out << render_verdicts(verdicts, Format::json);
        }
        return static_cast<int>(kExitOk);
    });
}

int run_command(const RunOptions& options, std::ostream& out, std::ostream& err) {
    if (options.subcommand == "calibrate") return cmd_calibrate(options, out, err);
    if (options.subcommand == "probs") return cmd_probs(options, out, err);
    if (options.subcommand == "simulate") return cmd_simulate(options, out, err);
    if (options.subcommand == "benchmark") return cmd_benchmark(options, out, err);
    err << "error: unknown subcommand '" << options.subcommand << "'\n";
    return kExitValidation;
}

} // namespace f1bench
