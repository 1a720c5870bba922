#pragma once

// Text renderings (CSV, JSON, Markdown) of calibration, probability,
// simulation and verdict results.

#include <span>
#include <string>
#include <string_view>

#include "f1bench/benchmark.hpp"
#include "f1bench/calibration.hpp"
#include "f1bench/points.hpp"
#include "f1bench/season_sim.hpp"

namespace f1bench {

enum class Format { csv, json, md };

std::string_view to_string(Format f) noexcept;
Format parse_format(std::string_view text);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_exact(double value);

std::string render_calibration(const ModelParams& params, Scenario scenario, Format format);

/// Table of positions 1-10 and podium/top8/top10 aggregates for both
/// classes, plus expected season points for `config`'s race counts.
std::string render_probabilities(const ModelParams& params, const SeasonConfig& config, Format format);

std::string render_summaries(std::span<const SimulationSummary> summaries, Format format);

std::string render_verdicts(std::span<const Verdict> verdicts, Format format);

} // namespace f1bench
