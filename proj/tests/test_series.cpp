#include <doctest.h>

#include <cmath>

#include "pins.hpp"
#include "plap/errors.hpp"
#include "plap/series.hpp"
#include "test_util.hpp"

using namespace plap;
using testutil::rel_err;

namespace {

PowerSeries random_series(std::size_t order, bool zero_constant = false) {
    std::vector<double> c(order + 1);
    for (auto& v : c) {
        v = testutil::uniform(-1.0, 1.0);
    }
    if (zero_constant) {
        c[0] = 0.0;
    }
    return PowerSeries(std::move(c));
}

void check_close(const PowerSeries& a, const PowerSeries& b, double tol) {
    REQUIRE(a.order() == b.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
        CHECK(std::fabs(a[k] - b[k]) <= tol * (1.0 + std::fabs(b[k])));
    }
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("construction and accessors") {
    const PowerSeries s{1.0, 2.0, 3.0};
    CHECK(s.order() == 2);
    CHECK(s.constant() == 1.0);
    CHECK(s[2] == 3.0);
    CHECK_THROWS(s[3]);
    CHECK(s(2.0) == 1.0 + 4.0 + 12.0);
    CHECK(PowerSeries::zero(4).order() == 4);
    CHECK(PowerSeries::identity(3)[1] == 1.0);
    CHECK_THROWS_AS(PowerSeries::identity(0), StructuralError);
    CHECK_THROWS_AS(PowerSeries(std::vector<double>{}), StructuralError);
    CHECK(s.truncated(1).order() == 1);
    CHECK(s.truncated(5).order() == 2);
}

TEST_CASE("exp of a scaled identity") {
    const auto e = exp(2.0 * PowerSeries::identity(3));
    CHECK(e[0] == doctest::Approx(1.0));
    CHECK(e[1] == doctest::Approx(2.0));
    CHECK(e[2] == doctest::Approx(2.0));
    CHECK(e[3] == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("log_one_minus of the identity") {
    const auto l = log_one_minus(PowerSeries::identity(4));
    const double want[] = {0.0, -1.0, -0.5, -1.0 / 3.0, -0.25};
    for (int k = 0; k <= 4; ++k) {
        CHECK(l[k] == doctest::Approx(want[k]).epsilon(1e-15));
    }
}

TEST_CASE("structural errors") {
    const PowerSeries with_constant{1.0, 1.0, 0.0};
    CHECK_THROWS_AS(log_one_minus(with_constant), StructuralError);
    CHECK_THROWS_AS(compose(PowerSeries::identity(3), with_constant), StructuralError);
    CHECK_THROWS_AS(divide_by_x(with_constant), StructuralError);
    CHECK_THROWS_AS(divide_by_x(PowerSeries{0.0}), StructuralError);
}

TEST_CASE("binary operations keep the smaller order") {
    const auto a = random_series(5);
    const auto b = random_series(3);
    CHECK((a + b).order() == 3);
    CHECK((a - b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(divide_by_x(PowerSeries::identity(5)).order() == 4);
}

TEST_CASE("t series") {
    const auto t = t_series(8);
    CHECK(t[0] == 0.0);
    CHECK(t[1] == 0.0);
    CHECK(t[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
    CHECK(t[4] == doctest::Approx(-1.0 / 120.0).epsilon(1e-16));
    CHECK(t[8] == doctest::Approx(-1.0 / 362880.0).epsilon(1e-16));
    CHECK(t[3] == 0.0);
    CHECK(std::fabs(t(0.3) - sinc_deficit(0.3)) < 1e-12);
}

TEST_CASE("asymptotic coefficients match the closed forms") {
    const auto c = lambda_asymptotic_series(10);
    CHECK(c.order() == 10);
    CHECK(std::fabs(c[0] - zeta_offset) <= 1e-12);
    const double pi2 = pi * pi;
    CHECK(std::fabs(c[1] - (pi2 * pi / 72.0 - pi / 6.0)) <= 1e-12);
    CHECK(std::fabs(c[2] - (pi2 * pi2 / 1296.0 - pi2 / 120.0)) <= 1e-12);
    CHECK(c[1] == doctest::Approx(-0.092956043927).epsilon(1e-10));
    CHECK(c[2] == doctest::Approx(-0.0070853677).epsilon(1e-8));
}

TEST_CASE("asymptotic coefficients match a contour-integral oracle") {
    const auto c = lambda_asymptotic_series(10);
    for (std::size_t k = 0; k <= 10; ++k) {
        CHECK(std::fabs(c[k] - pins::asym[k]) <= 1e-13 * (1.0 + std::fabs(pins::asym[k])) + 1e-16);
    }
}

TEST_CASE("pipeline intermediates") {
    const auto pl = asymptotic_pipeline(6);
    CHECK(pl.t.order() >= 8);
    CHECK(pl.log_sinc[2] == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
    CHECK(pl.log_sinc[4] == doctest::Approx(-1.0 / 180.0).epsilon(1e-14));
    // y = exp(π(x/6 + x³/180 + ...)) starts 1 + πx/6
    CHECK(pl.y[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pl.y[1] == doctest::Approx(pi / 6.0).epsilon(1e-15));
    CHECK(pl.y[2] == doctest::Approx(pi * pi / 72.0).epsilon(1e-14));
    CHECK(pl.lambda_minus_p.order() == 6);
}

TEST_CASE("lambda_approx accuracy") {
    const PParam p100(100.0);
    const double exact = lambda_exact(p100).value;
    CHECK(std::fabs(lambda_approx(p100, 2) - exact) < 1e-4);
    CHECK(std::fabs(lambda_approx(p100, 8) - exact) < 1e-13 * exact);

    const PParam p10(10.0);
    const double exact10 = lambda_exact(p10).value;
    double previous = INFINITY;
    for (std::size_t n = 0; n <= 8; ++n) {
        const double err = std::fabs(lambda_approx(p10, n) - exact10);
        CHECK(err < previous);
        previous = err;
    }
}

TEST_CASE("lambda_approx agrees with lambda_exact for large p") {
    for (double p = 50.0; p <= 1e4; p *= 1.3) {
        const PParam pp(p);
        CHECK(rel_err(lambda_approx(pp, 8), lambda_exact(pp).value) <= 1e-12);
        const double gap = std::fabs(lambda_approx(pp, 8) - lambda_exact(pp).value);
        CHECK(gap <= 10.0 * std::fabs(lambda_approx_remainder_estimate(pp, 8)) + 4e-16 * p);
    }
}

TEST_CASE("ring laws on random series") {
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(7);
        const auto b = random_series(7);
        const auto c = random_series(7);
        check_close(a + b, b + a, 1e-15);
        check_close(a * b, b * a, 1e-14);
        check_close((a * b) * c, a * (b * c), 1e-13);
        check_close(a * (b + c), a * b + a * c, 1e-13);
        check_close(a - a, PowerSeries::zero(7), 0.0);
    }
}

TEST_CASE("exp and log are inverse and exp is a homomorphism") {
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(8, true);
        const auto b = random_series(8, true);
        check_close(exp(a + b), exp(a) * exp(b), 1e-12);
        // log(1 − (1 − e^a)) = a
        check_close(log_one_minus(-(exp(a) - 1.0)), a, 1e-12);
    }
}

TEST_CASE("composition identities") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_series(6);
        const auto inner = random_series(6, true);
        check_close(compose(s, PowerSeries::identity(6)), s, 0.0);
        // evaluating the composite agrees with nested evaluation at small x
        const double x = 0.01;
        CHECK(std::fabs(compose(s, inner)(x) - s(inner(x))) < 1e-10);
    }
}

TEST_CASE("divide_by_x of x·S gives a prefix of S") {
    const auto s = random_series(6);
    const auto q = divide_by_x(PowerSeries::identity(7) * s);
    // min-order rule: identity(7)·s has order 6, so the quotient has order 5
    REQUIRE(q.order() == 5);
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(q[k] == doctest::Approx(s[k]).epsilon(1e-15));
    }
}

TEST_CASE("coefficients are stable under extending the order") {
    const auto lo = lambda_asymptotic_series(6);
    const auto hi = lambda_asymptotic_series(12);
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(lo[k] == hi[k]);
    }
}

TEST_CASE("t series has only even powers") {
    const auto t = t_series(15);
    for (std::size_t k = 1; k <= 15; k += 2) {
        CHECK(t[k] == 0.0);
    }
}

TEST_CASE("differentiating the series reproduces lambda_prime") {
    const auto c = lambda_asymptotic_series(10);
    const double p = 20.0;
    const double x = pi / p;
    // d/dp [p + Σ c_k x^k] = 1 − (x/p)·Σ k c_k x^{k−1}
    double deriv = 0.0;
    for (std::size_t k = 1; k <= 10; ++k) {
        deriv += static_cast<double>(k) * c[k] * std::pow(x, static_cast<double>(k) - 1.0);
    }
    const double approx = 1.0 - (x / p) * deriv;
    CHECK(rel_err(approx, lambda_prime(PParam(p))) <= 1e-4);
}

}
