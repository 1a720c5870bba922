#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "f1bench/calibration.hpp"
#include "f1bench/special_fn.hpp"
#include "normal_oracle.hpp"

using namespace f1bench;

TEST_CASE("sigma_elite") {
    const double s = calibrate_sigma_elite();
    CHECK(std::abs(s - 2.607903) <= 1e-6);
    CHECK(std::abs(8.0 * std_normal_cdf(-3.0 / s).value() - 1.0) <= 1e-9);
    CHECK(std::abs(std_normal_cdf(-3.0 / 2.607903).value() - 0.125) <= 1e-6);
    // Same value through the win-threshold form (1.5 - 4.5) / sigma.
    CHECK(std::abs(std_normal_cdf((1.5 - 4.5) / s).value() - 1.0 / 8.0) <= 1e-12);
    // Independent route: bisection on the reference CDF.
    CHECK(std::abs(s - (-3.0 / oracle::quantile(1.0 / 8.0))) <= 1e-10);
}

TEST_CASE("sigma_nonelite") {
    const double s = calibrate_sigma_nonelite();
    CHECK(std::abs(s - 3.615344) <= 1e-6);
    CHECK(std::abs(12.0 * std_normal_cdf(-5.0 / s).value() - 1.0) <= 1e-9);
    CHECK(std::abs(std_normal_cdf(-5.0 / 3.615344).value() - 1.0 / 12.0) <= 1e-6);
    CHECK(s > calibrate_sigma_elite());
    CHECK(std::abs(s - (-5.0 / oracle::quantile(1.0 / 12.0))) <= 1e-10);
}

TEST_CASE("elite pair covariance") {
    const double se = calibrate_sigma_elite();
    const double cov = calibrate_cov_elite(se);
    CHECK(std::abs(cov - (-6.051472)) <= 1e-5);
    CHECK(std::abs(calibrate_cov_elite(2.607903) - (-6.051472)) <= 1e-5);
    CHECK(std::abs(cov / (se * se) - (-0.88977)) <= 1e-4);
    const double pair_sd = std::sqrt(2.0 * se * se + 2.0 * cov);
    CHECK(std::abs(pair_sd - 6.0 / 4.9) <= 1e-9);
    CHECK(std::abs(pair_sd - 1.224490) <= 1e-6);
    // The construction: Pr(r1 + r2 <= 3) = Phi(-4.9).
    CHECK(std::abs((3.0 - 9.0) / pair_sd - (-4.9)) <= 1e-12);
    CHECK_THROWS_AS(calibrate_cov_elite(0.0), std::invalid_argument);
}

TEST_CASE("non-elite pair covariance") {
    const double sn = calibrate_sigma_nonelite();
    const double cov = calibrate_cov_nonelite(sn);
    CHECK(std::abs(cov - (-10.98825)) <= 1e-5);
    CHECK(std::abs(calibrate_cov_nonelite(3.615344) - (-10.98825)) <= 1e-5);
    CHECK(std::abs(std::sqrt(2.0 * sn * sn + 2.0 * cov) - 10.0 / 4.9) <= 1e-9);
    CHECK(std::abs(std::sqrt(2.0 * sn * sn + 2.0 * cov) - 2.040816) <= 1e-6);
    CHECK(std::abs(cov) < sn * sn);
    CHECK_THROWS_AS(calibrate_cov_nonelite(-1.0), std::invalid_argument);
}

TEST_CASE("make_params per scenario") {
    const ModelParams base = make_params(Scenario::baseline);
    const ModelParams dom = make_params(Scenario::dominant_manufacturer);
    const ModelParams rookie = make_params(Scenario::rookie);
    CHECK(base.mu_elite == 4.5);
    CHECK(dom.mu_elite == 5.5);
    for (const auto& p : {base, dom, rookie}) {
        CHECK(p.mu_nonelite == 14.5);
        CHECK(p.z_table_limit == 4.9);
        CHECK(p.sigma_elite == base.sigma_elite);
        CHECK(p.sigma_nonelite == base.sigma_nonelite);
        CHECK(p.cov_elite_pair == base.cov_elite_pair);
        CHECK(p.cov_nonelite_pair == base.cov_nonelite_pair);
    }
    CHECK(rookie.mu_elite == 4.5);
}

TEST_CASE("parameter invariants") {
    const ModelParams p = make_params(Scenario::baseline);
    CHECK_NOTHROW(p.validate());
    CHECK(p.sigma_elite > 0.0);
    CHECK(p.sigma_nonelite > p.sigma_elite);
    CHECK(p.cov_elite_pair < 0.0);
    CHECK(p.cov_nonelite_pair < 0.0);
    // Leading minors of both 2x2 covariance matrices.
    for (DriverClass c : {DriverClass::elite, DriverClass::nonelite}) {
        const double v = p.sigma(c) * p.sigma(c);
        CHECK(v > 0.0);
        CHECK(v * v - p.pair_cov(c) * p.pair_cov(c) > 0.0);
        CHECK(p.pair_positive_definite(c));
    }

    ModelParams bad = p;
    bad.cov_elite_pair = -p.sigma_elite * p.sigma_elite;
    CHECK_FALSE(bad.pair_positive_definite(DriverClass::elite));
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.sigma_nonelite = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("residuals of the defining equations") {
    for (Scenario s : {Scenario::baseline, Scenario::dominant_manufacturer}) {
        const auto r = residuals(make_params(s));
        CHECK(std::abs(r.elite_win) < 1e-9);
        CHECK(std::abs(r.nonelite_top9) < 1e-9);
        CHECK(std::abs(r.elite_pair_sum) < 1e-9);
        CHECK(std::abs(r.nonelite_pair_sum) < 1e-9);
        CHECK(r.max_abs() < 1e-9);
    }
}

TEST_CASE("parsing") {
    CHECK(parse_scenario("baseline") == Scenario::baseline);
    CHECK(parse_scenario("dominant") == Scenario::dominant_manufacturer);
    CHECK(parse_scenario("dominant_manufacturer") == Scenario::dominant_manufacturer);
    CHECK(parse_scenario("rookie") == Scenario::rookie);
    CHECK_THROWS_AS(parse_scenario("bogus"), std::invalid_argument);
    CHECK(parse_driver_class("elite") == DriverClass::elite);
    CHECK_THROWS_AS(parse_driver_class("Elite"), std::invalid_argument);
}
