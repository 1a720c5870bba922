#pragma once

// Model parameters for elite and non-elite finishing positions, derived from
// a handful of structural constraints on the 20-car grid.

#include <string>
#include <string_view>

namespace f1bench {

enum class DriverClass { elite, nonelite };

enum class Scenario { baseline, dominant_manufacturer, rookie };

std::string_view to_string(DriverClass c) noexcept;
std::string_view to_string(Scenario s) noexcept;

/// Accepts "elite" / "nonelite". Throws std::invalid_argument otherwise.
DriverClass parse_driver_class(std::string_view text);

/// Accepts "baseline", "dominant" (or "dominant_manufacturer") and "rookie".
/// Throws std::invalid_argument otherwise.
Scenario parse_scenario(std::string_view text);

/// Standard-normal quantile treated as "probability zero" when a printed
/// four-decimal table is read literally. Fixes both pair covariances.
inline constexpr double kZTableLimit = 4.9;

/// Mean finishing position of an elite-team driver: E[U{1,8}].
inline constexpr double kEliteMean = 4.5;
/// Same with one dominant manufacturer taking the top two places: E[U{3,8}].
inline constexpr double kDominantEliteMean = 5.5;
/// Mean finishing position of a non-elite driver: E[U{9,20}].
inline constexpr double kNonEliteMean = 14.5;

struct ModelParams {
    double mu_elite = kEliteMean;
    double mu_nonelite = kNonEliteMean;
    double sigma_elite = 0.0;
    double sigma_nonelite = 0.0;
    double cov_elite_pair = 0.0;
    double cov_nonelite_pair = 0.0;
    double z_table_limit = kZTableLimit;

    double mean(DriverClass c) const noexcept { return c == DriverClass::elite ? mu_elite : mu_nonelite; }
    double sigma(DriverClass c) const noexcept { return c == DriverClass::elite ? sigma_elite : sigma_nonelite; }
    double pair_cov(DriverClass c) const noexcept {
        return c == DriverClass::elite ? cov_elite_pair : cov_nonelite_pair;
    }
    double pair_correlation(DriverClass c) const noexcept { return pair_cov(c) / (sigma(c) * sigma(c)); }

    /// True when the 2x2 teammate covariance matrix for `c` is positive definite.
    bool pair_positive_definite(DriverClass c) const noexcept;

    /// Throws std::invalid_argument when a standard deviation is not positive
    /// or a pair covariance matrix is not positive definite.
    void validate() const;
};

/// sigma_E solving 8 * Phi((1.5 - 4.5) / sigma_E) = 1: one of eight elite
/// drivers wins every race.
double calibrate_sigma_elite();

/// sigma_N solving 12 * Phi((9.5 - 14.5) / sigma_N) = 1: one of twelve
/// non-elite drivers is always in the top nine.
double calibrate_sigma_nonelite();

/// Covariance making the elite pair sum r1 + r2 <= 3 a z_table_limit event.
/// Throws std::invalid_argument for sigma_elite <= 0.
double calibrate_cov_elite(double sigma_elite);

/// Covariance making the non-elite pair sum r1 + r2 <= 39 a certain event at
/// z_table_limit. Throws std::invalid_argument for sigma_nonelite <= 0.
double calibrate_cov_nonelite(double sigma_nonelite);

/// Parameters for a scenario. Only the elite mean varies; the rookie scenario
/// shares the baseline parameters and is applied to the summaries afterwards.
ModelParams make_params(Scenario scenario);

/// Residuals of the defining equations evaluated at `params`.
struct CalibrationResiduals {
    double elite_win;          // 8 * Phi(-3 / sigma_E) - 1
    double nonelite_top9;      // 12 * Phi(-5 / sigma_N) - 1
    double elite_pair_sum;     // sqrt(2 sigma_E^2 + 2 sigma_EE) - 6 / 4.9
    double nonelite_pair_sum;  // sqrt(2 sigma_N^2 + 2 sigma_NN) - 10 / 4.9

    double max_abs() const noexcept;
};

CalibrationResiduals residuals(const ModelParams& params);

} // namespace f1bench
