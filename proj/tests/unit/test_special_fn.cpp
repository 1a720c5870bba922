#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "f1bench/special_fn.hpp"
#include "normal_oracle.hpp"

using f1bench::Probability;
using f1bench::std_normal_cdf;
using f1bench::std_normal_quantile;

namespace {
double phi(double z) { return std_normal_cdf(z).value(); }
double q(double p) { return std_normal_quantile(Probability(p)); }
} // namespace

TEST_CASE("oracle sanity against known erf values") {
    // erf(1) and erfc(4) to 18 digits.
    CHECK(std::abs(static_cast<double>(oracle::erf_series(1.0L)) - 0.842700792949714869) < 1e-16);
    CHECK(std::abs(static_cast<double>(oracle::erfc_ref(4.0L)) / 1.541725790028001885e-8 - 1.0) < 1e-14);
}

TEST_CASE("cdf examples") {
    CHECK(phi(0.0) == 0.5);
    // Bisection-inverted reference: Phi(-1.150349) = 0.12500007830176...
    CHECK(std::abs(phi(-1.150349) - 0.125) <= 1e-6);
    CHECK(std::abs(phi(-1.150349) - oracle::cdf(-1.150349)) <= 1e-12);
    // Phi(-4.9) = 4.7918e-7: zero at four printed decimals.
    CHECK(std::abs(phi(-4.9) - 4.79183276590319e-7) < 1e-15);
    CHECK(std::round(phi(-4.9) * 1e4) == 0.0);
}

TEST_CASE("cdf agrees with the long-double reference to 1e-12") {
    double worst = 0.0;
    for (double z = -9.0; z <= 9.0; z += 0.00731) {
        worst = std::max(worst, std::abs(phi(z) - oracle::cdf(z)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("cdf symmetry and monotonicity") {
    double prev = -1.0;
    for (double z = -8.0; z <= 8.0; z += 0.001) {
        CHECK(std::abs(phi(z) + phi(-z) - 1.0) <= 1e-12);
        const double v = phi(z);
        // Above z = 6 consecutive grid values can round to the same double
        // near 1, so only non-decreasing is observable there.
        if (z <= 6.0) REQUIRE(v > prev);
        else REQUIRE(v >= prev);
        prev = v;
    }
}

TEST_CASE("cdf rejects non-finite input") {
    CHECK_THROWS_AS(std_normal_cdf(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(std_normal_cdf(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(std_normal_cdf(-std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("quantile examples") {
    CHECK(q(0.5) == 0.0);
    // mpmath to 30 digits: -1.15034938037600817..., -1.38299412710063836...
    CHECK(std::abs(q(1.0 / 8.0) - (-1.150349)) <= 1e-6);
    CHECK(std::abs(q(1.0 / 12.0) - (-1.382994)) <= 1e-6);
    CHECK(std::abs(q(1.0 / 8.0) - oracle::quantile(1.0 / 8.0)) <= 1e-11);
    CHECK(std::abs(q(1.0 / 12.0) - oracle::quantile(1.0 / 12.0)) <= 1e-11);
    CHECK(std::abs(q(1.0 / 8.0) - (-1.1503493803760082)) <= 1e-14);
}

TEST_CASE("quantile round trip and antisymmetry on the probability grid") {
    for (int i = 1; i <= 999; ++i) {
        const double p = i / 1000.0;
        CHECK(std::abs(phi(q(p)) - p) <= 1e-9);
        CHECK(std::abs(q(1.0 - p) + q(p)) <= 1e-9);
        CHECK(std::abs(q(p) - oracle::quantile(p)) <= 1e-10);
    }
}

TEST_CASE("quantile tails stay accurate") {
    for (double p : {1e-300, 1e-100, 1e-20, 1e-10, 1e-5}) {
        const double x = q(p);
        CHECK(std::isfinite(x));
        CHECK(std::abs(phi(x) / p - 1.0) < 1e-12);
    }
}

TEST_CASE("quantile rejects the closed ends and out-of-range input") {
    CHECK_THROWS_AS(q(0.0), std::domain_error);
    CHECK_THROWS_AS(q(1.0), std::domain_error);
    CHECK_THROWS_AS(q(-0.1), std::domain_error);
    CHECK_THROWS_AS(q(1.1), std::domain_error);
    CHECK_THROWS_AS(Probability(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}
