#pragma once

#include <initializer_list>
#include <numbers>
#include <span>

// Cancellation-safe elementary building blocks shared by the eigenvalue
// formulas and the inequality harness.

namespace plap {

inline constexpr double pi = std::numbers::pi;

/// π²/6 − 1, the constant offset of the large-p expansion.
inline constexpr double zeta_offset = pi * pi / 6.0 - 1.0;

/// Below this argument the Maclaurin tails are summed instead of subtracting
/// nearly equal quantities.
inline constexpr double series_switch = 0.5;

/// t(x) = (x − sin x)/x, with t(0) = 0.
double sinc_deficit(double x);

/// log(x / sin x) = −log(1 − t(x)) for 0 <= x < π.
///
/// Accurate to a few ulps relative for x <= π/2. For x close to π the caller
/// should pass the reflected argument through log_x_over_sin_reflected.
double log_x_over_sin(double x);

/// log(x / sin x) where d = π − x is supplied separately, so that sin x = sin d
/// is computed without the rounding error of forming π − x.
double log_x_over_sin_reflected(double x, double d);

/// sin z − z cos z, which behaves like z³/3 near zero.
double sin_minus_z_cos(double z);

/// Neumaier (improved Kahan–Babuška) sum.
double compensated_sum(std::span<const double> terms);
double compensated_sum(std::initializer_list<double> terms);

}  // namespace plap
