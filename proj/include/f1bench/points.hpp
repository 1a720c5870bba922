#pragma once

#include <array>
#include <cstdint>

#include "f1bench/calibration.hpp"

namespace f1bench {

inline constexpr int kGridSize = 20;

enum class RaceKind { full, sprint };

/// Points awarded per finishing position for full and sprint races.
class PointsTable {
public:
    using Schedule = std::array<int, kGridSize>;

    constexpr PointsTable(const Schedule& full, const Schedule& sprint) : full_(full), sprint_(sprint) {}

    /// The 2025 scoring rules: top ten in a full race, top eight in a sprint.
    static constexpr PointsTable season_2025() {
        return PointsTable({25, 18, 15, 12, 10, 8, 6, 4, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                           {8, 7, 6, 5, 4, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    }

    /// Throws std::out_of_range for positions outside 1..20.
    int points(RaceKind kind, int position) const;

    /// Unchecked lookup; 1 <= position <= 20.
    constexpr int points_unchecked(RaceKind kind, int position) const noexcept {
        return (kind == RaceKind::full ? full_ : sprint_)[static_cast<std::size_t>(position - 1)];
    }

    constexpr int max_points(RaceKind kind) const noexcept { return points_unchecked(kind, 1); }

    const Schedule& schedule(RaceKind kind) const noexcept { return kind == RaceKind::full ? full_ : sprint_; }

private:
    Schedule full_;
    Schedule sprint_;
};

/// Season length, Monte Carlo size and seed for one simulation run.
struct SeasonConfig {
    int races_full = 24;
    int races_sprint = 6;
    std::uint64_t n_sims = 1'000'000;
    std::uint64_t master_seed = 20251207;
    Scenario scenario = Scenario::baseline;

    int races() const noexcept { return races_full + races_sprint; }

    /// Race index r < races_full is a full race, the rest are sprints.
    RaceKind race_kind(int race_index) const noexcept {
        return race_index < races_full ? RaceKind::full : RaceKind::sprint;
    }

    /// Throws std::invalid_argument for negative race counts or n_sims == 0.
    void validate() const;
};

} // namespace f1bench
