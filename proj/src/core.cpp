#include "plap/core.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "plap/errors.hpp"

namespace plap {

namespace {

constexpr double pi2_over_6 = pi * pi / 6.0;

void require_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw DomainError("exponent p must be finite and > 1, got " + std::to_string(p));
    }
}

// p·log(x/sin x) evaluated at the non-reflected or reflected argument,
// whichever is <= π/2.
//
// For p >= 2:  λ = (p−1)·exp(w),            w = p·log(x/sin x)
// For p <  2:  λ = exp(−δ log δ + w),       w = p·log(d/sin d),  δ = p−1, d = π−x
//
// The second form follows from rewriting (π/(p sin x))^p with sin x = sin d and
// π/p·... = d/δ; it avoids the cancellation between log δ and p·log(x/sin x)
// that both diverge as p → 1.
double weighted_log(const PParam& p) {
    if (p.p() >= 2.0) {
        return p.p() * log_x_over_sin(p.x());
    }
    return p.p() * log_x_over_sin(p.reflected());
}

double neg_delta_log_delta(double delta) {
    return -delta * std::log(delta);
}

}  // namespace

PParam::PParam(double p) {
    require_p(p);
    p_ = p;
    x_ = pi / p;
    excess_ = p - 1.0;
    q_ = p / excess_;
    reflected_ = pi * excess_ / p;
}

std::string_view to_string(Regime r) {
    return r == Regime::LowP ? "LowP" : "HighP";
}

double conjugate(double p) {
    require_p(p);
    return p / (p - 1.0);
}

EigenValue lambda_exact(const PParam& p) {
    const double w = weighted_log(p);
    const double delta = p.excess();
    if (p.p() >= 2.0) {
        return {delta * std::exp(w), std::log(delta) + w};
    }
    const double log_value = neg_delta_log_delta(delta) + w;
    return {std::exp(log_value), log_value};
}

EigenValue lambda_scaled(const PParam& p, double half_length) {
    if (!(half_length > 0.0) || !std::isfinite(half_length)) {
        throw DomainError("half-length L must be finite and > 0, got " + std::to_string(half_length));
    }
    const double log_value = lambda_exact(p).log_value - p.p() * std::log(half_length);
    return {std::exp(log_value), log_value};
}

double lambda_log_derivative(const PParam& p) {
    const double x = p.x();
    const double d = p.reflected();
    if (p.p() >= 2.0) {
        // x/(π−x) − log(sin x/x) + (x cos x − sin x)/sin x
        return x / d + log_x_over_sin(x) - sin_minus_z_cos(x) / std::sin(x);
    }
    // −log(sin x/x) + x(1/(π−x) + cot x) − 1, grouped so the two poles cancel
    return log_x_over_sin_reflected(x, d) + x * grouped_term(d) - 1.0;
}

double lambda_prime(const PParam& p) {
    return lambda_exact(p).value * lambda_log_derivative(p);
}

double lambda_minus_p(const PParam& p) {
    if (p.p() >= 2.0) {
        // (p−1)y − p = p(y−1) − y
        const double w = weighted_log(p);
        return p.p() * std::expm1(w) - std::exp(w);
    }
    return lambda_exact(p).value - p.p();
}

double asymptotic_gap(const PParam& p) {
    if (p.p() >= 2.0) {
        const double w = weighted_log(p);
        return compensated_sum({p.p() * std::expm1(w), -std::exp(w), -zeta_offset});
    }
    return compensated_sum({lambda_exact(p).value, -p.p(), -zeta_offset});
}

BoundSandwich bounds_for(const PParam& p) {
    if (p.p() >= 2.0) {
        return global_bounds(p);
    }
    const double delta = p.excess();
    const double w = weighted_log(p);
    const double common = neg_delta_log_delta(delta);
    const double lower_tail = delta * std::log1p(delta);
    const double upper_tail = delta * std::log1p(pi2_over_6 * delta);

    BoundSandwich out{};
    out.p = p.p();
    out.regime = Regime::LowP;
    out.lower = std::exp(common + lower_tail);
    out.upper = std::exp(common + upper_tail);
    out.value = std::exp(common + w);
    out.lower_margin = out.lower * std::expm1(w - lower_tail);
    out.upper_margin = out.value * std::expm1(upper_tail - w);
    return out;
}

BoundSandwich global_bounds(const PParam& p) {
    BoundSandwich out{};
    out.p = p.p();
    out.regime = Regime::HighP;
    out.lower = p.p();
    out.upper = p.p() + zeta_offset;
    out.value = lambda_exact(p).value;
    out.lower_margin = lambda_minus_p(p);
    out.upper_margin = -asymptotic_gap(p);
    return out;
}

SincBounds sinc_bounds(double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("sinc sandwich requires 0 < x < 1, got " + std::to_string(x));
    }
    const double log_one_minus = std::log1p(-x);
    SincBounds out{};
    out.lower = std::exp(x * (log_one_minus - std::log1p(zeta_offset * x)));
    out.upper = std::exp(x * log_one_minus);
    if (x <= 0.5) {
        out.sinc = 1.0 - sinc_deficit(pi * x);
    } else {
        out.sinc = std::sin(pi * (1.0 - x)) / (pi * x);
    }
    return out;
}

SincLogMargins sinc_log_margins(double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("sinc sandwich requires 0 < x < 1, got " + std::to_string(x));
    }
    const double log_one_minus = std::log1p(-x);
    const double log_sinc = -log_x_over_sin_reflected(pi * x, pi * (1.0 - x));
    return {log_sinc - x * (log_one_minus - std::log1p(zeta_offset * x)),
            x * log_one_minus - log_sinc};
}

double grouped_term(double d) {
    if (!(d > 0.0 && d < pi)) {
        throw DomainError("grouped term requires 0 < π − x < π, got " + std::to_string(d));
    }
    return sin_minus_z_cos(d) / (d * std::sin(d));
}

double pstar_criterion(const PParam& p, double half_length) {
    if (!(half_length > 0.0)) {
        throw DomainError("half-length L must be > 0");
    }
    return lambda_log_derivative(p) - std::log(half_length);
}

PStarResult find_pstar_detailed(double half_length, double tol) {
    if (!(half_length > 1.0) || !std::isfinite(half_length)) {
        throw DomainError("p_* exists only for L > 1 (λ(p, L) is increasing for L <= 1), got L = " +
                          std::to_string(half_length));
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be > 0");
    }
    auto criterion = [&](double p) { return pstar_criterion(PParam(p), half_length); };

    constexpr double start = 1.01;
    double lo = start;
    double hi = start;
    if (criterion(start) > 0.0) {
        hi = 2.0 * start;
        while (criterion(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (!std::isfinite(hi) || hi > 1e300) {
                throw ToleranceError("no sign change found while doubling the p bracket");
            }
        }
    } else {
        // very large L puts the root below the starting point
        lo = 1.0 + 0.5 * (start - 1.0);
        while (criterion(lo) <= 0.0) {
            hi = lo;
            lo = 1.0 + 0.5 * (lo - 1.0);
            if (lo - 1.0 < 1e-300) {
                throw ToleranceError("no sign change found while halving towards p = 1");
            }
        }
    }

    PStarResult out{};
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    for (int it = 1; it <= 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = criterion(mid);
        out.pstar = mid;
        out.criterion = f;
        out.iterations = it;
        if (std::fabs(f) <= tol) {
            return out;
        }
        if (f > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * mid) {
            break;
        }
    }
    throw ToleranceError("p_* bisection converged in p but |criterion| = " +
                         std::to_string(std::fabs(out.criterion)) + " exceeds tol");
}

double find_pstar(double half_length, double tol) {
    return find_pstar_detailed(half_length, tol).pstar;
}

}  // namespace plap
