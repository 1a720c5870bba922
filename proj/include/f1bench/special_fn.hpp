#pragma once

// Standard normal distribution function and its inverse.

namespace f1bench {

/// A probability in the closed interval [0, 1].
class Probability {
public:
    /// Throws std::domain_error when `value` is NaN or outside [0, 1].
    explicit Probability(double value);

    constexpr double value() const noexcept { return value_; }

    friend constexpr bool operator==(Probability, Probability) = default;

private:
    double value_;
};

/// Phi(z), the N(0,1) cumulative distribution function.
///
/// Evaluated through the complementary error function so the lower tail keeps
/// full relative precision. Absolute error is below 1e-15 over the real line.
/// Throws std::domain_error for non-finite z.
Probability std_normal_cdf(double z);

/// Phi^-1(p) for 0 < p < 1.
///
/// Wichura's AS 241 rational approximation refined by one Newton step against
/// std_normal_cdf. Exactly antisymmetric: q(1 - p) == -q(p) whenever 1 - p is
/// representable. Throws std::domain_error for p == 0 or p == 1.
double std_normal_quantile(Probability p);

/// Density of N(0,1).
double std_normal_pdf(double z) noexcept;

namespace detail {

// Unchecked variants for the simulation hot loop. Callers guarantee finite
// input and 0 < p < 1 respectively.
double cdf_unchecked(double z) noexcept;
double quantile_unchecked(double p) noexcept;

} // namespace detail

} // namespace f1bench
