#include "plap/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "plap/errors.hpp"

namespace plap {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

struct State {
    double u;
    double v;
};

State operator+(State a, State b) { return {a.u + b.u, a.v + b.v}; }
State operator*(double s, State a) { return {s * a.u, s * a.v}; }

// Dormand–Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b − b̂ (fifth minus fourth order weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

class Integrator {
public:
    Integrator(double p, double q, double lambda, double rtol, double atol, double scale)
        : p_(p), q_(q), lambda_(lambda), rtol_(rtol), atol_(atol), min_step_(1e-15 * scale) {}

    State rhs(const State& y) const { return {phi(y.v, q_), -lambda_ * phi(y.u, p_)}; }

    // Advances y from t to t_end.
    void advance(State& y, double t, double t_end) {
        State k1 = rhs(y);
        while (t < t_end) {
            const bool last = t + h_ >= t_end;
            const double h = last ? t_end - t : h_;

            const State k2 = rhs(y + (h * a21) * k1);
            const State k3 = rhs(y + h * (a31 * k1 + a32 * k2));
            const State k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
            const State k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            const State k6 = rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            const State next = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            const State k7 = rhs(next);
            const State err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

            const double su = atol_ + rtol_ * std::max(std::fabs(y.u), std::fabs(next.u));
            const double sv = atol_ + rtol_ * std::max(std::fabs(y.v), std::fabs(next.v));
            const double norm = std::max(std::fabs(err.u) / su, std::fabs(err.v) / sv);

            if (norm <= 1.0) {
                t = last ? t_end : t + h;
                y = next;
                k1 = k7;  // FSAL
                ++steps_;
                const double grow = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
                if (!last || grow < 1.0) {
                    h_ = h * grow;
                }
            } else {
                h_ = h * std::max(0.2, 0.9 * std::pow(norm, -0.2));
                if (h_ < min_step_) {
                    throw IntegrationError("RK step size underflow at t = " + std::to_string(t) +
                                           " (lambda = " + std::to_string(lambda_) + ")");
                }
            }
        }
    }

    void set_step(double h) { h_ = h; }
    int steps() const noexcept { return steps_; }

private:
    double p_;
    double q_;
    double lambda_;
    double rtol_;
    double atol_;
    double min_step_;
    double h_ = 1e-6;
    int steps_ = 0;
};

struct Trajectory {
    double end_u;
    bool interior_positive;
    int ode_steps;
};

Trajectory integrate(const PParam& p, double lambda, int segments, const ShootingOptions& opts) {
    const double len = opts.half_length;
    const double pp = p.p();
    const double q = p.q();

    // The right-hand side is not Lipschitz in u at u = 0 when p < 2, so the
    // first step uses the local expansion u ≈ s − (q−1)λ s^{p+1}/(p(p+1)),
    // v ≈ 1 − λ s^p/p.
    const double s0 = 1e-6 * len;
    State y{s0 - (q - 1.0) * lambda * std::pow(s0, pp + 1.0) / (pp * (pp + 1.0)),
            1.0 - lambda * std::pow(s0, pp) / pp};

    Integrator rk(pp, q, lambda, opts.rtol, opts.atol, len);
    rk.set_step(s0);

    Trajectory out{0.0, true, 0};
    double t = -len + s0;
    const double dt = 2.0 * len / segments;
    for (int i = 1; i <= segments; ++i) {
        const double t_next = i == segments ? len : -len + dt * i;
        rk.advance(y, t, t_next);
        t = t_next;
        if (i < segments && !(y.u > 0.0)) {
            out.interior_positive = false;
        }
    }
    out.end_u = y.u;
    out.ode_steps = rk.steps() + 1;
    return out;
}

void check_shooting_args(double lambda, const ShootingOptions& opts) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("shooting requires lambda > 0");
    }
    if (!(opts.half_length > 0.0)) {
        throw DomainError("shooting requires half-length L > 0");
    }
}

// Tanh–sinh rule on [0, b] for an integrand bounded on the closed interval.
template <class F>
double tanh_sinh(F&& f, double b, double tol) {
    constexpr double t_max = 4.0;
    constexpr int max_level = 12;
    const double half = 0.5 * b;

    auto node = [&](double t) {
        const double s = 0.5 * pi * std::sinh(t);
        const double e = std::exp(-2.0 * std::fabs(s));
        // w − 0 and b − w without cancellation
        const double small = b * e / (1.0 + e);
        const double large = b - small;
        const double w = s >= 0 ? large : small;
        const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
        const double weight = half * 0.5 * pi * std::cosh(t) * sech2;
        return weight * f(w);
    };

    double h = 1.0;
    double sum = node(0.0);
    for (double t = h; t <= t_max; t += h) {
        sum += node(t) + node(-t);
    }
    double estimate = h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (double t = h; t <= t_max; t += 2.0 * h) {
            sum += node(t) + node(-t);
        }
        const double next = h * sum;
        const double diff = std::fabs(next - estimate);
        estimate = next;
        if (level >= 3 && diff <= tol) {
            return estimate;
        }
    }
    throw ToleranceError("tanh-sinh quadrature did not reach tolerance " + std::to_string(tol));
}

// ∫₀^{2^{−1/r}} (1 − w^r)^{−1/r} dw; the integrand is bounded by 2^{1/r}.
double truncated_half_period(double r, double tol) {
    const double upper = std::exp2(-1.0 / r);
    return tanh_sinh([r](double w) { return std::pow(1.0 - std::pow(w, r), -1.0 / r); }, upper, tol);
}

}  // namespace

double phi(double s, double r) {
    if (!(r > 1.0)) {
        throw DomainError("phi requires exponent r > 1, got " + std::to_string(r));
    }
    if (s == 0.0) {
        return 0.0;
    }
    return std::copysign(std::pow(std::fabs(s), r - 1.0), s);
}

double shoot_residual(const PParam& p, double lambda, int steps, const ShootingOptions& opts) {
    check_shooting_args(lambda, opts);
    if (steps < 100) {
        throw DomainError("shooting requires at least 100 checkpoint steps");
    }
    return integrate(p, lambda, steps, opts).end_u;
}

ShootingResult eigenvalue_shooting(const PParam& p, double tol, const ShootingOptions& opts) {
    check_shooting_args(1.0, opts);
    if (!(tol > 0.0)) {
        throw DomainError("shooting tolerance must be > 0");
    }
    if (opts.segments < 100) {
        throw DomainError("shooting requires at least 100 checkpoint steps");
    }
    const auto bounds = bounds_for(p);
    const double scale = std::pow(opts.half_length, -p.p());
    double lo = 0.9 * bounds.lower * scale;
    double hi = 1.1 * bounds.upper * scale;

    const auto at_lo = integrate(p, lo, opts.segments, opts);
    const auto at_hi = integrate(p, hi, opts.segments, opts);
    if (!(at_lo.end_u > 0.0 && at_hi.end_u < 0.0)) {
        throw BracketError("shooting residual has no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }

    ShootingResult out{};
    for (int it = 1; it <= opts.max_bisections; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto tr = integrate(p, mid, opts.segments, opts);
        out = {mid, tr.end_u, it, tr.ode_steps};
        if (std::fabs(tr.end_u) <= tol && tr.interior_positive) {
            return out;
        }
        if (tr.end_u > 0.0 && tr.interior_positive) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 4.0 * eps * mid) {
            break;
        }
    }
    throw ToleranceError("shooting stopped with |u(L)| = " + std::to_string(std::fabs(out.residual)) +
                         " above tol " + std::to_string(tol));
}

double pi_p_quadrature(const PParam& p, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("quadrature tolerance must be > 0");
    }
    // With u = s^p the integral is (2/p)·B(1/p, 1/q). Splitting at u = 1/2 and
    // substituting u = w^p on the left and 1 − u = z^q on the right removes
    // both endpoint singularities:
    //   2∫₀¹(1 − s^p)^{−1/p} ds = 2·S_p + 2/(p−1)·S_q
    const double left = truncated_half_period(p.p(), 0.25 * tol);
    const double right = truncated_half_period(p.q(), 0.25 * tol * p.excess());
    return 2.0 * left + 2.0 / p.excess() * right;
}

double pi_p_closed_form(const PParam& p) {
    const double s = p.p() >= 2.0 ? std::sin(p.x()) : std::sin(p.reflected());
    return 2.0 * pi / (p.p() * s);
}

}  // namespace plap
