#pragma once

#include <string_view>

#include "plap/special.hpp"

namespace plap {

/// Exponent p of the p-Laplacian, validated to lie in (1, ∞).
///
/// Carries the substitution x = π/p, the conjugate q = p/(p−1), and the two
/// complements p − 1 and π − x computed without cancellation.
class PParam {
public:
    explicit PParam(double p);

    double p() const noexcept { return p_; }
    /// π/p, in (0, π).
    double x() const noexcept { return x_; }
    /// p/(p−1).
    double q() const noexcept { return q_; }
    /// p − 1.
    double excess() const noexcept { return excess_; }
    /// π − x = π(p−1)/p.
    double reflected() const noexcept { return reflected_; }

    PParam conjugate() const { return PParam(q_); }

private:
    double p_;
    double x_;
    double q_;
    double excess_;
    double reflected_;
};

struct EigenValue {
    double value;
    double log_value;
};

enum class Regime { LowP, HighP };

std::string_view to_string(Regime r);

/// Lower/upper bound around λ(p). Margins are computed from log-space
/// differences, so they stay accurate where the bound and λ agree to more
/// digits than a double can hold (p → 1, p → ∞).
struct BoundSandwich {
    double p;
    double lower;
    double value;
    double upper;
    double lower_margin;
    double upper_margin;
    Regime regime;
};

struct SincBounds {
    double lower;
    double sinc;
    double upper;
};

/// Log-space gaps log(sinc) − log(lower) and log(upper) − log(sinc).
struct SincLogMargins {
    double lower;
    double upper;
};

double conjugate(double p);

/// λ(p) = (p−1)(π/(p sin(π/p)))^p, the first Dirichlet eigenvalue on (−1, 1).
EigenValue lambda_exact(const PParam& p);

/// λ(p, L) = λ(p)/L^p on (−L, L).
EigenValue lambda_scaled(const PParam& p, double half_length);

/// λ'(p)/λ(p), the bracket of the derivative formula.
double lambda_log_derivative(const PParam& p);

double lambda_prime(const PParam& p);

/// λ(p) − p.
double lambda_minus_p(const PParam& p);

/// λ(p) − p − (π²/6 − 1), which vanishes as p → ∞.
double asymptotic_gap(const PParam& p);

/// Regime-specific bounds: p < λ < p + π²/6 − 1 for p >= 2, and its conjugate
/// transform (p/(p−1))^{p−1} < λ < (p−1)^{1−p}(1 + π²(p−1)/6)^{p−1} for 1 < p < 2.
BoundSandwich bounds_for(const PParam& p);

/// p < λ(p) < p + π²/6 − 1 applied on the whole range (1, ∞).
BoundSandwich global_bounds(const PParam& p);

/// ((1−x)/(1+(π²/6−1)x))^x < sin(πx)/(πx) < (1−x)^x on (0, 1).
SincBounds sinc_bounds(double x);
SincLogMargins sinc_log_margins(double x);

/// 1/(π−x) + cos x / sin x evaluated from d = π − x; tends to 0 like d/3.
double grouped_term(double d);

/// d/dp of λ(p, L), up to the positive factor L^{-p}: λ'(p) − λ(p) log L,
/// divided by λ(p).
double pstar_criterion(const PParam& p, double half_length);

struct PStarResult {
    double pstar;
    double criterion;
    double bracket_lo;
    double bracket_hi;
    int iterations;
};

/// Unique p where λ(p, L) turns from increasing to decreasing, L > 1.
PStarResult find_pstar_detailed(double half_length, double tol);

double find_pstar(double half_length, double tol);

}  // namespace plap
