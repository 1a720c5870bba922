#pragma once

// Seeded Monte Carlo simulation of season points for a single driver
// (univariate model) and a two-driver team (bivariate model).

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

#include "f1bench/calibration.hpp"
#include "f1bench/points.hpp"

namespace f1bench {

enum class Category { elite_driver, elite_team, nonelite_driver, nonelite_team };

inline constexpr Category kAllCategories[] = {Category::elite_driver, Category::elite_team,
                                              Category::nonelite_driver, Category::nonelite_team};

std::string_view to_string(Category c) noexcept;
Category parse_category(std::string_view text);

constexpr DriverClass class_of(Category c) noexcept {
    return c == Category::elite_driver || c == Category::elite_team ? DriverClass::elite : DriverClass::nonelite;
}
constexpr bool is_team(Category c) noexcept { return c == Category::elite_team || c == Category::nonelite_team; }
constexpr Category make_category(DriverClass cls, bool team) noexcept {
    if (cls == DriverClass::elite) return team ? Category::elite_team : Category::elite_driver;
    return team ? Category::nonelite_team : Category::nonelite_driver;
}

struct SimulationSummary {
    Category category = Category::elite_driver;
    Scenario scenario = Scenario::baseline;
    double mean_points = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t n_sims = 0;

    friend bool operator==(const SimulationSummary&, const SimulationSummary&) = default;
};

/// Nearest integer, halves away from zero, clamped to 1..20.
inline int round_clamp_position(double draw) noexcept {
    const double r = std::round(draw);
    if (!(r >= 1.0)) return 1;
    if (r > kGridSize) return kGridSize;
    return static_cast<int>(r);
}

/// Raw (unrounded) finishing positions of two teammates in one race.
struct RacePair {
    double first;
    double second;
};

/// Independent standard normals addressed by (seed, sim_index, race_index).
/// Driver index 0 is `first`, driver index 1 is `second`.
RacePair standard_normal_pair(std::uint64_t seed, std::uint64_t sim_index, int race_index) noexcept;

/// Raw position of a lone driver of `cls` in one race.
double draw_driver_race(const ModelParams& params, DriverClass cls, std::uint64_t seed, std::uint64_t sim_index,
                        int race_index) noexcept;

/// Raw positions of two correlated teammates in one race, through the
/// Cholesky factor of the 2x2 pair covariance.
RacePair draw_team_race(const ModelParams& params, DriverClass cls, std::uint64_t seed, std::uint64_t sim_index,
                        int race_index) noexcept;

/// Season total for one driver given a source of raw positions per race.
template <class DrawFn>
int driver_season_points(const SeasonConfig& config, DrawFn&& raw_position,
                         const PointsTable& table = PointsTable::season_2025()) {
    int total = 0;
    for (int race = 0; race < config.races(); ++race) {
        total += table.points_unchecked(config.race_kind(race), round_clamp_position(raw_position(race)));
    }
    return total;
}

/// Season total for a two-driver team given a source of raw position pairs.
template <class DrawFn>
int team_season_points(const SeasonConfig& config, DrawFn&& raw_pair,
                       const PointsTable& table = PointsTable::season_2025()) {
    int total = 0;
    for (int race = 0; race < config.races(); ++race) {
        const RacePair pair = raw_pair(race);
        const RaceKind kind = config.race_kind(race);
        total += table.points_unchecked(kind, round_clamp_position(pair.first));
        total += table.points_unchecked(kind, round_clamp_position(pair.second));
    }
    return total;
}

/// One simulated driver season; deterministic in (config.master_seed, sim_index).
int simulate_driver_season(const ModelParams& params, DriverClass cls, const SeasonConfig& config,
                           std::uint64_t sim_index);

/// One simulated team season. Throws std::invalid_argument when the pair
/// covariance matrix is not positive definite.
int simulate_team_season(const ModelParams& params, DriverClass cls, const SeasonConfig& config,
                         std::uint64_t sim_index);

/// Exact distribution of integer season totals. Merging is order independent.
class SeasonTotals {
public:
    void add(int total);
    void merge(const SeasonTotals& other);

    std::uint64_t count() const noexcept { return count_; }
    double mean() const noexcept;
    /// Smallest attained total whose cumulative count reaches `rank` (1-based).
    int value_at_rank(std::uint64_t rank) const;
    const std::vector<std::uint64_t>& histogram() const noexcept { return counts_; }

private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t count_ = 0;
    std::uint64_t sum_ = 0;
};

/// Season totals for sims [begin, end).
SeasonTotals simulate_totals(Category category, const ModelParams& params, const SeasonConfig& config,
                             std::uint64_t begin, std::uint64_t end);

/// Mean and 95% percentile interval (nearest-rank 2.5th and 97.5th
/// percentiles) of config.n_sims season totals. `workers` threads split the
/// sim range; the result does not depend on it. Throws std::invalid_argument
/// when n_sims < 40.
SimulationSummary summarize(Category category, const ModelParams& params, const SeasonConfig& config,
                            unsigned workers = 1);

/// Same, with parameters from make_params(config.scenario).
SimulationSummary summarize(Category category, const SeasonConfig& config, unsigned workers = 1);

/// Halves a baseline elite-driver benchmark for a first-season driver.
/// Throws std::invalid_argument for any other category or scenario.
SimulationSummary rookie_benchmark(const SimulationSummary& base);

} // namespace f1bench
