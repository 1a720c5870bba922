#pragma once

// Test-only reference implementations, independent of the library's
// erfc/AS241 path: a long-double erf series and continued fraction,
// bisection for the quantile, and adaptive Simpson integration of the density.

#include <cmath>
#include <functional>

namespace oracle {

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n 2^n x^(2n+1) / (1*3*...*(2n+1)); all
// terms positive, so no cancellation.
inline long double erf_series(long double x) {
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 500; ++n) {
        term *= 2.0L * x * x / (2.0L * n + 1.0L);
        sum += term;
        if (term < sum * 1e-21L) break;
    }
    return 2.0L / std::sqrt(kPi) * std::exp(-x * x) * sum;
}

// erfc(x) for x >= 3 by the Laplace continued fraction, evaluated bottom-up.
inline long double erfc_continued_fraction(long double x) {
    long double f = x;
    for (int k = 200; k >= 1; --k) {
        f = x + (k / 2.0L) / f;
    }
    return std::exp(-x * x) / std::sqrt(kPi) / f;
}

inline long double erfc_ref(long double x) {
    if (x < 0) return 2.0L - erfc_ref(-x);
    if (x < 3.0L) return 1.0L - erf_series(x);
    return erfc_continued_fraction(x);
}

inline double cdf(double z) {
    return static_cast<double>(0.5L * erfc_ref(-static_cast<long double>(z) / std::sqrt(2.0L)));
}

inline double pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * 3.14159265358979323846); }

// Bisection on the reference CDF until the bracket is below `tol`.
inline double quantile(double p, double tol = 1e-13) {
    double lo = -40.0;
    double hi = 40.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace detail {
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                      double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}
} // namespace detail

// Adaptive Simpson quadrature of f over [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b, double eps = 1e-13) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson(f, a, b, fa, fm, fb, whole, eps, 60);
}

// Mass of N(mean, sigma^2) over [a, b]; infinite ends are cut at 12 sigma.
inline double normal_mass(double mean, double sigma, double a, double b) {
    const double lo = std::isinf(a) ? mean - 12.0 * sigma : a;
    const double hi = std::isinf(b) ? mean + 12.0 * sigma : b;
    if (hi <= lo) return 0.0;
    return integrate([&](double x) { return pdf((x - mean) / sigma) / sigma; }, lo, hi);
}

} // namespace oracle
