#include <doctest.h>

#include <cmath>

#include "pins.hpp"
#include "plap/errors.hpp"
#include "plap/oracle.hpp"
#include "test_util.hpp"

using namespace plap;
using testutil::rel_err;

TEST_SUITE("oracle") {

TEST_CASE("phi") {
    CHECK(phi(0.0, 3.0) == 0.0);
    CHECK(phi(-2.0, 3.0) == -4.0);
    CHECK(phi(2.0, 2.0) == 2.0);
    CHECK(phi(-8.0, 1.5) == doctest::Approx(-std::sqrt(8.0)).epsilon(1e-15));
    CHECK(phi(0.0, 1.5) == 0.0);
}

TEST_CASE("residual for the linear case") {
    const PParam p2(2.0);
    CHECK(std::fabs(shoot_residual(p2, pi * pi / 4, 1001)) < 1e-9);
    // u = sin(√λ (s+1))/√λ, so at λ = π²/16 the endpoint value is 4/π
    CHECK(shoot_residual(p2, pi * pi / 16, 1001) == doctest::Approx(4.0 / pi).epsilon(1e-9));
    int changes = 0;
    double prev = shoot_residual(p2, 1.0, 1001);
    for (int i = 1; i <= 60; ++i) {
        const double r = shoot_residual(p2, 1.0 + 3.0 * i / 60.0, 1001);
        if ((r > 0) != (prev > 0)) {
            ++changes;
        }
        prev = r;
    }
    CHECK(changes == 1);
    CHECK_THROWS_AS(shoot_residual(p2, 2.0, 50), DomainError);
    CHECK_THROWS_AS(shoot_residual(p2, -1.0, 1001), DomainError);
}

TEST_CASE("shooting reproduces the linear eigenvalue") {
    const auto r = eigenvalue_shooting(PParam(2.0), 1e-12);
    CHECK(rel_err(r.lambda_estimate, pi * pi / 4) <= 1e-8);
    CHECK(r.bisection_iterations > 0);
    CHECK(r.ode_steps > 0);
}

TEST_CASE("shooting agrees with the closed form") {
    for (double p : {1.2, 1.5, 2.0, 3.0, 5.0, 10.0}) {
        const PParam pp(p);
        const auto r = eigenvalue_shooting(pp, 1e-10);
        CHECK(rel_err(r.lambda_estimate, lambda_exact(pp).value) <= 1e-6);
        const auto b = bounds_for(pp);
        CHECK(r.lambda_estimate > b.lower);
        CHECK(r.lambda_estimate < b.upper);
    }
}

TEST_CASE("residual decreases through the eigenvalue") {
    for (double p : {1.5, 3.0}) {
        const PParam pp(p);
        const double lam = lambda_exact(pp).value;
        double prev = shoot_residual(pp, lam * 0.9, 1001);
        CHECK(prev > 0.0);
        for (int i = 1; i <= 10; ++i) {
            const double r = shoot_residual(pp, lam * (0.9 + 0.02 * i), 1001);
            CHECK(r < prev);
            prev = r;
        }
        CHECK(prev < 0.0);
    }
}

TEST_CASE("shooting on a scaled interval") {
    for (double p : {2.0, 3.0}) {
        for (double L : {0.5, 2.0}) {
            ShootingOptions opts;
            opts.half_length = L;
            const PParam pp(p);
            const auto r = eigenvalue_shooting(pp, 1e-10, opts);
            CHECK(rel_err(r.lambda_estimate, lambda_scaled(pp, L).value) <= 1e-5);
        }
    }
}

TEST_CASE("pi_p quadrature") {
    CHECK(rel_err(pi_p_quadrature(PParam(2.0), 1e-13), pi) <= 1e-12);
    CHECK(rel_err(pi_p_quadrature(PParam(4.0), 1e-13), pins::pi_p_4) <= 1e-12);
    for (double p : {1.1, 1.5, 2.0, 3.0, 10.0, 50.0}) {
        const PParam pp(p);
        CHECK(rel_err(pi_p_quadrature(pp, 1e-12), pi_p_closed_form(pp)) <= 1e-8);
    }
    double prev = INFINITY;
    for (double p : {5.0, 50.0, 500.0, 5000.0}) {
        const double v = pi_p_quadrature(PParam(p), 1e-12);
        CHECK(v > 2.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev - 2.0 < 1e-6);
}

TEST_CASE("oracle argument validation") {
    CHECK_THROWS_AS(eigenvalue_shooting(PParam(2.0), 0.0), DomainError);
    CHECK_THROWS_AS(pi_p_quadrature(PParam(2.0), -1.0), DomainError);
    ShootingOptions bad;
    bad.half_length = 0.0;
    CHECK_THROWS_AS(eigenvalue_shooting(PParam(2.0), 1e-10, bad), DomainError);
}

}
