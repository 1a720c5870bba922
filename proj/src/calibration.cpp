#include "f1bench/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "f1bench/special_fn.hpp"

namespace f1bench {

namespace {

constexpr double kEliteDrivers = 8.0;
constexpr double kNonEliteDrivers = 12.0;
constexpr double kWinThreshold = 1.5;
// Eight elite cars, so the ninth place always goes to a non-elite driver.
constexpr double kNonEliteTopNineThreshold = 9.5;
// Smallest possible elite pair sum (1 + 2) and largest non-elite pair sum (19 + 20).
constexpr double kEliteMinPairSum = 3.0;
constexpr double kNonEliteMaxPairSum = 39.0;

// Solves (bound - 2 mu) / sqrt(2 sigma^2 + 2 cov) = +-z for cov.
double pair_cov(double bound, double mean, double sigma) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("pair covariance needs a positive standard deviation");
    }
    const double gap = bound - 2.0 * mean;
    return gap * gap / (2.0 * kZTableLimit * kZTableLimit) - sigma * sigma;
}

} // namespace

std::string_view to_string(DriverClass c) noexcept {
    return c == DriverClass::elite ? "elite" : "nonelite";
}

std::string_view to_string(Scenario s) noexcept {
    switch (s) {
    case Scenario::baseline: return "baseline";
    case Scenario::dominant_manufacturer: return "dominant_manufacturer";
    case Scenario::rookie: return "rookie";
    }
    return "baseline";
}

DriverClass parse_driver_class(std::string_view text) {
    if (text == "elite") return DriverClass::elite;
    if (text == "nonelite") return DriverClass::nonelite;
    throw std::invalid_argument("unknown class '" + std::string(text) + "' (expected elite or nonelite)");
}

Scenario parse_scenario(std::string_view text) {
    if (text == "baseline") return Scenario::baseline;
    if (text == "dominant" || text == "dominant_manufacturer") return Scenario::dominant_manufacturer;
    if (text == "rookie") return Scenario::rookie;
    throw std::invalid_argument("unknown scenario '" + std::string(text) +
                                "' (expected baseline, dominant or rookie)");
}

bool ModelParams::pair_positive_definite(DriverClass c) const noexcept {
    const double var = sigma(c) * sigma(c);
    const double cov = pair_cov(c);
    return var > 0.0 && var * var - cov * cov > 0.0;
}

void ModelParams::validate() const {
    if (!(sigma_elite > 0.0) || !(sigma_nonelite > 0.0)) {
        throw std::invalid_argument("standard deviations must be positive");
    }
    if (!pair_positive_definite(DriverClass::elite)) {
        throw std::invalid_argument("elite pair covariance matrix is not positive definite");
    }
    if (!pair_positive_definite(DriverClass::nonelite)) {
        throw std::invalid_argument("non-elite pair covariance matrix is not positive definite");
    }
}

double calibrate_sigma_elite() {
    const double z = std_normal_quantile(Probability(1.0 / kEliteDrivers));
    return (kWinThreshold - kEliteMean) / z;
}

double calibrate_sigma_nonelite() {
    const double z = std_normal_quantile(Probability(1.0 / kNonEliteDrivers));
    return (kNonEliteTopNineThreshold - kNonEliteMean) / z;
}

double calibrate_cov_elite(double sigma_elite) {
    return pair_cov(kEliteMinPairSum, kEliteMean, sigma_elite);
}

double calibrate_cov_nonelite(double sigma_nonelite) {
    return pair_cov(kNonEliteMaxPairSum, kNonEliteMean, sigma_nonelite);
}

ModelParams make_params(Scenario scenario) {
    ModelParams p;
    p.mu_elite = scenario == Scenario::dominant_manufacturer ? kDominantEliteMean : kEliteMean;
    p.mu_nonelite = kNonEliteMean;
    p.sigma_elite = calibrate_sigma_elite();
    p.sigma_nonelite = calibrate_sigma_nonelite();
    p.cov_elite_pair = calibrate_cov_elite(p.sigma_elite);
    p.cov_nonelite_pair = calibrate_cov_nonelite(p.sigma_nonelite);
    p.z_table_limit = kZTableLimit;
    return p;
}

double CalibrationResiduals::max_abs() const noexcept {
    return std::max({std::abs(elite_win), std::abs(nonelite_top9), std::abs(elite_pair_sum),
                     std::abs(nonelite_pair_sum)});
}

CalibrationResiduals residuals(const ModelParams& params) {
    const double se = params.sigma_elite;
    const double sn = params.sigma_nonelite;
    CalibrationResiduals r{};
    r.elite_win = kEliteDrivers * std_normal_cdf((kWinThreshold - kEliteMean) / se).value() - 1.0;
    r.nonelite_top9 =
        kNonEliteDrivers * std_normal_cdf((kNonEliteTopNineThreshold - kNonEliteMean) / sn).value() - 1.0;
    r.elite_pair_sum = std::sqrt(2.0 * se * se + 2.0 * params.cov_elite_pair) -
                       (2.0 * kEliteMean - kEliteMinPairSum) / params.z_table_limit;
    r.nonelite_pair_sum = std::sqrt(2.0 * sn * sn + 2.0 * params.cov_nonelite_pair) -
                          (kNonEliteMaxPairSum - 2.0 * kNonEliteMean) / params.z_table_limit;
    return r;
}

} // namespace f1bench
