#pragma once

#include "plap/core.hpp"

namespace plap {

/// |s|^{r−2}·s, with phi(0, r) = 0.
double phi(double s, double r);

struct ShootingOptions {
    double half_length = 1.0;      ///< solve on (−L, L)
    int segments = 1001;           ///< uniform checkpoints; segments − 1 interior grid points
    double rtol = 1e-11;           ///< embedded RK relative tolerance
    double atol = 1e-14;
    int max_bisections = 200;
};

struct ShootingResult {
    double lambda_estimate;
    double residual;  ///< u at the right endpoint
    int bisection_iterations;
    int ode_steps;    ///< accepted RK steps in the final integration
};

/// u(L) for u' = phi(v, q), v' = −λ·phi(u, p), u(−L) = 0, v(−L) = 1.
double shoot_residual(const PParam& p, double lambda, int steps, const ShootingOptions& opts = {});

/// First eigenvalue by bisection on the shooting residual.
ShootingResult eigenvalue_shooting(const PParam& p, double tol, const ShootingOptions& opts = {});

/// 2·∫₀¹ (1 − s^p)^{−1/p} ds, which equals 2π/(p sin(π/p)).
double pi_p_quadrature(const PParam& p, double tol);

/// Closed form 2π/(p sin(π/p)) used as the comparison target.
double pi_p_closed_form(const PParam& p);

}  // namespace plap
