#include "f1bench/season_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "f1bench/philox.hpp"
#include "f1bench/special_fn.hpp"

namespace f1bench {

namespace {

// Percentile ranks for the 95% interval: ceil(n / 40) and ceil(39 n / 40).
constexpr std::uint64_t kMinSimsForInterval = 40;

void require_positive_definite(const ModelParams& params, DriverClass cls) {
    if (!params.pair_positive_definite(cls)) {
        throw std::invalid_argument(std::string("pair covariance for ") + std::string(to_string(cls)) +
                                    " teams is not positive definite");
    }
}

int simulate_one(Category category, const ModelParams& params, const SeasonConfig& config,
                 std::uint64_t sim_index) {
    const DriverClass cls = class_of(category);
    if (is_team(category)) {
        return team_season_points(config, [&](int race) {
            return draw_team_race(params, cls, config.master_seed, sim_index, race);
        });
    }
    return driver_season_points(config, [&](int race) {
        return draw_driver_race(params, cls, config.master_seed, sim_index, race);
    });
}

} // namespace

std::string_view to_string(Category c) noexcept {
    switch (c) {
    case Category::elite_driver: return "elite_driver";
    case Category::elite_team: return "elite_team";
    case Category::nonelite_driver: return "nonelite_driver";
    case Category::nonelite_team: return "nonelite_team";
    }
    return "elite_driver";
}

Category parse_category(std::string_view text) {
    for (Category c : kAllCategories) {
        if (to_string(c) == text) return c;
    }
    throw std::invalid_argument("unknown category '" + std::string(text) + "'");
}

RacePair standard_normal_pair(std::uint64_t seed, std::uint64_t sim_index, int race_index) noexcept {
    const Philox4x32::Counter ctr{static_cast<std::uint32_t>(race_index), static_cast<std::uint32_t>(sim_index),
                                  static_cast<std::uint32_t>(sim_index >> 32), 0u};
    const Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const auto bits = Philox4x32::generate(ctr, key);
    return {detail::quantile_unchecked(open_unit_interval(bits[0], bits[1])),
            detail::quantile_unchecked(open_unit_interval(bits[2], bits[3]))};
}

double draw_driver_race(const ModelParams& params, DriverClass cls, std::uint64_t seed, std::uint64_t sim_index,
                        int race_index) noexcept {
    return params.mean(cls) + params.sigma(cls) * standard_normal_pair(seed, sim_index, race_index).first;
}

RacePair draw_team_race(const ModelParams& params, DriverClass cls, std::uint64_t seed, std::uint64_t sim_index,
                        int race_index) noexcept {
    const double mu = params.mean(cls);
    const double sigma = params.sigma(cls);
    const double rho = params.pair_correlation(cls);
    const RacePair z = standard_normal_pair(seed, sim_index, race_index);
    return {mu + sigma * z.first, mu + sigma * (rho * z.first + std::sqrt(1.0 - rho * rho) * z.second)};
}

int simulate_driver_season(const ModelParams& params, DriverClass cls, const SeasonConfig& config,
                           std::uint64_t sim_index) {
    return simulate_one(make_category(cls, false), params, config, sim_index);
}

int simulate_team_season(const ModelParams& params, DriverClass cls, const SeasonConfig& config,
                         std::uint64_t sim_index) {
    require_positive_definite(params, cls);
    return simulate_one(make_category(cls, true), params, config, sim_index);
}

void SeasonTotals::add(int total) {
    if (total < 0) {
        throw std::invalid_argument("season total cannot be negative");
    }
    const auto slot = static_cast<std::size_t>(total);
    if (slot >= counts_.size()) {
        counts_.resize(slot + 1, 0);
    }
    ++counts_[slot];
    ++count_;
    sum_ += static_cast<std::uint64_t>(total);
}

void SeasonTotals::merge(const SeasonTotals& other) {
    if (other.counts_.size() > counts_.size()) {
        counts_.resize(other.counts_.size(), 0);
    }
    for (std::size_t i = 0; i < other.counts_.size(); ++i) {
        counts_[i] += other.counts_[i];
    }
    count_ += other.count_;
    sum_ += other.sum_;
}

double SeasonTotals::mean() const noexcept {
    return count_ == 0 ? 0.0 : static_cast<double>(sum_) / static_cast<double>(count_);
}

int SeasonTotals::value_at_rank(std::uint64_t rank) const {
    if (rank == 0 || rank > count_) {
        throw std::out_of_range("rank outside 1..count");
    }
    std::uint64_t cumulative = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        cumulative += counts_[i];
        if (cumulative >= rank) return static_cast<int>(i);
    }
    return static_cast<int>(counts_.size()) - 1;
}

SeasonTotals simulate_totals(Category category, const ModelParams& params, const SeasonConfig& config,
                             std::uint64_t begin, std::uint64_t end) {
    if (is_team(category)) {
        require_positive_definite(params, class_of(category));
    }
    SeasonTotals totals;
    for (std::uint64_t sim = begin; sim < end; ++sim) {
        totals.add(simulate_one(category, params, config, sim));
    }
    return totals;
}

SimulationSummary summarize(Category category, const ModelParams& params, const SeasonConfig& config,
                            unsigned workers) {
    config.validate();
    if (config.n_sims < kMinSimsForInterval) {
        throw std::invalid_argument("n_sims must be at least 40 for a 95% percentile interval");
    }
    if (is_team(category)) {
        require_positive_definite(params, class_of(category));
    }

    const std::uint64_t n = config.n_sims;
    const unsigned width = static_cast<unsigned>(std::clamp<std::uint64_t>(workers == 0 ? 1 : workers, 1, n));
    std::vector<SeasonTotals> parts(width);
    {
        std::vector<std::jthread> pool;
        pool.reserve(width);
        for (unsigned w = 0; w < width; ++w) {
            const std::uint64_t begin = n * w / width;
            const std::uint64_t end = n * (w + 1) / width;
            pool.emplace_back([&, w, begin, end] { parts[w] = simulate_totals(category, params, config, begin, end); });
        }
    }
    SeasonTotals merged;
    for (const auto& part : parts) {
        merged.merge(part);
    }

    SimulationSummary s;
    s.category = category;
    s.scenario = config.scenario == Scenario::rookie ? Scenario::baseline : config.scenario;
    s.mean_points = merged.mean();
    s.ci_low = merged.value_at_rank((n + 39) / 40);
    s.ci_high = merged.value_at_rank((39 * n + 39) / 40);
    s.n_sims = n;
    return s;
}

SimulationSummary summarize(Category category, const SeasonConfig& config, unsigned workers) {
    return summarize(category, make_params(config.scenario), config, workers);
}

SimulationSummary rookie_benchmark(const SimulationSummary& base) {
    if (base.category != Category::elite_driver || base.scenario != Scenario::baseline) {
        throw std::invalid_argument("rookie benchmark applies only to the baseline elite-driver summary");
    }
    SimulationSummary r = base;
    r.scenario = Scenario::rookie;
    r.mean_points = base.mean_points / 2.0;
    r.ci_low = base.ci_low / 2.0;
    r.ci_high = base.ci_high / 2.0;
    return r;
}

} // namespace f1bench
