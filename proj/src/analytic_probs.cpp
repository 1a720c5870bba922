#include "f1bench/analytic_probs.hpp"

#include <stdexcept>
#include <string>

#include "f1bench/special_fn.hpp"

namespace f1bench {

namespace {

double upper_cdf(const ModelParams& params, DriverClass cls, int position) {
    return std_normal_cdf((position + 0.5 - params.mean(cls)) / params.sigma(cls)).value();
}

} // namespace

double position_probability(const ModelParams& params, DriverClass cls, int position) {
    if (position < 1 || position > kGridSize) {
        throw std::out_of_range("finishing position " + std::to_string(position) + " outside 1..20");
    }
    if (position == 1) {
        return upper_cdf(params, cls, 1);
    }
    if (position == kGridSize) {
        // Upper tail through the reflected argument keeps relative precision.
        return std_normal_cdf((params.mean(cls) - (kGridSize - 0.5)) / params.sigma(cls)).value();
    }
    return upper_cdf(params, cls, position) - upper_cdf(params, cls, position - 1);
}

PositionDistribution position_distribution(const ModelParams& params, DriverClass cls) {
    PositionDistribution out{};
    for (int k = 1; k <= kGridSize; ++k) {
        out[static_cast<std::size_t>(k - 1)] = position_probability(params, cls, k);
    }
    return out;
}

double aggregate_probability(const ModelParams& params, DriverClass cls, Aggregate kind) {
    return upper_cdf(params, cls, last_position(kind));
}

double expected_season_points(const ModelParams& params, DriverClass cls, const SeasonConfig& config,
                              const PointsTable& table) {
    if (config.races_full < 0 || config.races_sprint < 0) {
        throw std::invalid_argument("race counts must be non-negative");
    }
    const PositionDistribution dist = position_distribution(params, cls);
    double per_full = 0.0;
    double per_sprint = 0.0;
    for (int k = 1; k <= kGridSize; ++k) {
        const double p = dist[static_cast<std::size_t>(k - 1)];
        per_full += p * table.points_unchecked(RaceKind::full, k);
        per_sprint += p * table.points_unchecked(RaceKind::sprint, k);
    }
    return config.races_full * per_full + config.races_sprint * per_sprint;
}

} // namespace f1bench
