#pragma once

// Closed-form finishing-position probabilities under the rounded, clamped
// normal model, plus exact expected points.

#include <array>

#include "f1bench/calibration.hpp"
#include "f1bench/points.hpp"

namespace f1bench {

using PositionDistribution = std::array<double, kGridSize>;

/// Pr(round_clamp(X) == position) for X ~ N(mean, sigma^2) of `cls`.
/// Position 1 absorbs the lower tail and position 20 the upper tail.
/// Throws std::out_of_range for positions outside 1..20.
double position_probability(const ModelParams& params, DriverClass cls, int position);

/// All twenty bins; index 0 holds position 1.
PositionDistribution position_distribution(const ModelParams& params, DriverClass cls);

enum class Aggregate { podium, top8, top10 };

inline constexpr int last_position(Aggregate kind) noexcept {
    switch (kind) {
    case Aggregate::podium: return 3;
    case Aggregate::top8: return 8;
    case Aggregate::top10: return 10;
    }
    return 0;
}

/// Pr(position <= k) in closed form, Phi((k + 0.5 - mean) / sigma).
double aggregate_probability(const ModelParams& params, DriverClass cls, Aggregate kind);

/// Exact expected season points over config.races_full full races and
/// config.races_sprint sprints. Throws std::invalid_argument on negative counts.
double expected_season_points(const ModelParams& params, DriverClass cls, const SeasonConfig& config,
                              const PointsTable& table = PointsTable::season_2025());

} // namespace f1bench
