#include "f1bench/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace f1bench {

namespace {

// Wichura (1988), Algorithm AS 241, PPND16. Returns the lower-half quantile
// for 0 < p <= 0.5.
double as241_lower(double p) noexcept {
    const double q = p - 0.5;
    if (std::abs(q) < 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r +
                    4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r +
                  1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r +
                3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r +
                    2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r +
                  6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r +
                1.0);
    }

    double r = std::sqrt(-std::log(p));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r +
                 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r +
               5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r +
             1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r +
                 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r +
               1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r +
             1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r +
                 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r +
               1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r +
             6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r +
                 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r +
               1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r +
             1.0);
    }
    return -x;
}

} // namespace

Probability::Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::domain_error("probability out of [0, 1]: " + std::to_string(value));
    }
}

double std_normal_pdf(double z) noexcept {
    return std::exp(-0.5 * z * z) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2);
}

namespace detail {

double cdf_unchecked(double z) noexcept {
    return 0.5 * std::erfc(-z * (0.5 * std::numbers::sqrt2));
}

double quantile_unchecked(double p) noexcept {
    // 1 - p is exact for p in [0.5, 1], so reflecting keeps the upper half
    // exactly antisymmetric with the lower half.
    const bool upper = p > 0.5;
    const double lower_p = upper ? 1.0 - p : p;

    double x = as241_lower(lower_p);
    const double density = std_normal_pdf(x);
    if (density > 0.0) {
        x -= (cdf_unchecked(x) - lower_p) / density;
    }
    return upper ? -x : x;
}

} // namespace detail

Probability std_normal_cdf(double z) {
    if (!std::isfinite(z)) {
        throw std::domain_error("std_normal_cdf: non-finite argument");
    }
    return Probability(detail::cdf_unchecked(z));
}

double std_normal_quantile(Probability p) {
    const double v = p.value();
    if (v <= 0.0 || v >= 1.0) {
        throw std::domain_error("std_normal_quantile: p must lie strictly inside (0, 1)");
    }
    return detail::quantile_unchecked(v);
}

} // namespace f1bench
