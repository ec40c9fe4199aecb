#pragma once

#include <span>

namespace bnet::stats {

/// z for a two-sided 95% normal interval.
inline constexpr double z95 = 1.959963984540054;
/// z for a one-sided 95% normal test.
inline constexpr double z95_one_sided = 1.6448536269514722;

/// Arithmetic mean, accumulated in index order. Empty input gives 0.
double mean(std::span<double const> xs);

/// Unbiased sample variance; 0 for fewer than two values.
double sample_variance(std::span<double const> xs);

/// Standard error of the mean; 0 for fewer than two values.
double standard_error(std::span<double const> xs);

/// Half-width of the normal-approximation 95% interval of the mean.
/// Zero by convention for a single value.
double ci95_half_width(std::span<double const> xs);

/// Spearman rank correlation with average ranks for ties. Throws
/// std::invalid_argument on length mismatch, fewer than two points, or a
/// constant input (correlation undefined).
double spearman(std::span<double const> x, std::span<double const> y);

/// Delta-method standard error of (a - b) / b for independent estimates
/// with means `a`, `b` and standard errors `se_a`, `se_b`. Requires b > 0.
double relative_gain_se(double a, double se_a, double b, double se_b);

}  // namespace bnet::stats
