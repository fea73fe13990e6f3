#include "plap/special.hpp"

#include <cmath>
#include <limits>

namespace plap {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

}  // namespace

double sinc_deficit(double x) {
    const double ax = std::fabs(x);
    if (ax == 0.0) {
        return 0.0;
    }
    if (ax >= series_switch) {
        return (x - std::sin(x)) / x;
    }
    // x²/3! − x⁴/5! + x⁶/7! − ...
    const double x2 = x * x;
    double term = x2 / 6.0;
    double sum = term;
    for (int k = 2; k < 40; ++k) {
        term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
        if (std::fabs(term) <= eps * std::fabs(sum)) {
            break;
        }
    }
    return sum;
}

double log_x_over_sin(double x) {
    return -std::log1p(-sinc_deficit(x));
}

double log_x_over_sin_reflected(double x, double d) {
    if (x <= pi / 2) {
        return log_x_over_sin(x);
    }
    return std::log(x / std::sin(d));
}

double sin_minus_z_cos(double z) {
    if (std::fabs(z) >= series_switch) {
        return std::sin(z) - z * std::cos(z);
    }
    // Σ_{k>=1} (−1)^{k+1} 2k z^{2k+1} / (2k+1)!
    const double z2 = z * z;
    double power = z * z2 / 6.0;  // z^{2k+1}/(2k+1)! at k = 1
    double sum = 2.0 * power;
    for (int k = 2; k < 40; ++k) {
        power *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double term = 2.0 * k * power;
        sum += term;
        if (std::fabs(term) <= eps * std::fabs(sum)) {
            break;
        }
    }
    return sum;
}

double compensated_sum(std::span<const double> terms) {
    double sum = 0.0;
    double carry = 0.0;
    for (const double v : terms) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

double compensated_sum(std::initializer_list<double> terms) {
    return compensated_sum(std::span<const double>(terms.begin(), terms.size()));
}

}  // namespace plap
