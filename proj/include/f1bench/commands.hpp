#pragma once

// Subcommand implementations behind the f1bench executable. Each writes its
// report to `out`, diagnostics to `err`, and returns a process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "f1bench/calibration.hpp"
#include "f1bench/points.hpp"
#include "f1bench/report.hpp"
#include "f1bench/season_sim.hpp"

namespace f1bench {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 20251207;
inline constexpr const char* kSeedEnvVar = "F1BENCH_SEED";

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitNumeric = 2 };

struct RunOptions {
    std::string subcommand;
    SeasonConfig config;
    Format format = Format::csv;
    unsigned workers = 1;
    bool rookie = false;
    /// Empty means every category.
    std::vector<Category> categories;
    std::string results_path;
    /// benchmark: also write JSON verdicts here when non-empty.
    std::string json_path;
    std::string cache_dir;
};

/// kDefaultSeed unless F1BENCH_SEED holds a valid unsigned 64-bit integer.
std::uint64_t default_seed();

/// Parses a decimal unsigned 64-bit integer; nullopt on any junk.
std::optional<std::uint64_t> parse_seed(std::string_view text);

/// Everything needed to rerun a command and reproduce its output exactly.
struct RunManifest {
    RunOptions options;
    ModelParams params;
    std::string tool_version{kToolVersion};
    std::string timestamp;
};

RunManifest make_manifest(const RunOptions& options, std::string timestamp);
nlohmann::ordered_json to_json(const RunManifest& manifest);
/// Throws std::invalid_argument (or nlohmann::json::exception) on bad input.
RunManifest manifest_from_json(const nlohmann::json& j);

int cmd_calibrate(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_probs(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_benchmark(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Dispatches on options.subcommand.
int run_command(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Summaries for `categories` under options.config, read from or written to
/// the cache directory when one is set.
std::vector<SimulationSummary> load_or_simulate(const RunOptions& options, const std::vector<Category>& categories,
                                                std::ostream& err);

/// Cache file for a (seed, sims, scenario, race counts) key inside `dir`.
std::string cache_file(const std::string& dir, const SeasonConfig& config);

} // namespace f1bench
