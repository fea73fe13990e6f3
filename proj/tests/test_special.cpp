#include <doctest.h>

#include <cmath>

#include "plap/special.hpp"
#include "test_util.hpp"

using namespace plap;
using testutil::rel_err;

TEST_SUITE("special") {

TEST_CASE("sinc_deficit matches an extended-precision direct evaluation") {
    // long double keeps ~19 digits, enough to absorb the cancellation for x >= 0.05
    for (double x = 0.05; x < 3.0; x += 0.01) {
        const long double xl = x;
        const double want = static_cast<double>((xl - std::sin(xl)) / xl);
        CHECK(rel_err(sinc_deficit(x), want) < 1e-14);
    }
}

TEST_CASE("sinc_deficit keeps full precision for tiny arguments") {
    CHECK(sinc_deficit(0.0) == 0.0);
    for (double x : {1e-8, 1e-5, 1e-3}) {
        const double x2 = x * x;
        const double want = x2 / 6.0 - x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0;
        CHECK(rel_err(sinc_deficit(x), want) < 1e-15);
    }
    CHECK(sinc_deficit(-0.1) == doctest::Approx(sinc_deficit(0.1)).epsilon(1e-16));
}

TEST_CASE("series and direct branches agree at the switch point") {
    const double below = std::nextafter(series_switch, 0.0);
    CHECK(rel_err(sinc_deficit(below), sinc_deficit(series_switch)) < 1e-14);
    CHECK(rel_err(sin_minus_z_cos(below), sin_minus_z_cos(series_switch)) < 1e-14);
}

TEST_CASE("log_x_over_sin") {
    CHECK(rel_err(log_x_over_sin(pi / 2), std::log(pi / 2)) < 1e-15);
    const double x = 1e-4;
    CHECK(rel_err(log_x_over_sin(x), x * x / 6 + std::pow(x, 4) / 180) < 1e-15);
    // reflected argument near π
    const double d = 1e-9;
    CHECK(rel_err(log_x_over_sin_reflected(pi - d, d), std::log((pi - d) / d)) < 1e-15);
}

TEST_CASE("sin_minus_z_cos") {
    for (double z = 0.05; z < 3.0; z += 0.01) {
        const long double zl = z;
        const double want = static_cast<double>(std::sin(zl) - zl * std::cos(zl));
        CHECK(rel_err(sin_minus_z_cos(z), want) < 1e-13);
    }
    CHECK(rel_err(sin_minus_z_cos(1e-6), 1e-18 / 3.0 - 1e-30 / 30.0) < 1e-15);
}

TEST_CASE("compensated_sum recovers what naive summation loses") {
    CHECK(compensated_sum({1e16, 1.0, -1e16}) == 1.0);
    CHECK(compensated_sum({1.0, 1e100, 1.0, -1e100}) == 2.0);
}

}
