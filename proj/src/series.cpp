#include "plap/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "plap/errors.hpp"

namespace plap {

namespace {

void require_zero_constant(const PowerSeries& s, const char* op) {
    if (s.constant() != 0.0) {
        throw StructuralError(std::string(op) + " requires a series with zero constant term, got " +
                              std::to_string(s.constant()));
    }
}

}  // namespace

PowerSeries::PowerSeries() : coeffs_(1, 0.0) {}

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw StructuralError("a power series needs at least one coefficient");
    }
}

PowerSeries::PowerSeries(std::initializer_list<double> coeffs)
    : PowerSeries(std::vector<double>(coeffs)) {}

PowerSeries PowerSeries::zero(std::size_t order) {
    return PowerSeries(std::vector<double>(order + 1, 0.0));
}

PowerSeries PowerSeries::identity(std::size_t order) {
    if (order == 0) {
        throw StructuralError("the identity series needs order >= 1");
    }
    auto s = zero(order);
    s.coeffs_[1] = 1.0;
    return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    const std::size_t n = std::min(order, this->order());
    return PowerSeries(std::vector<double>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

double PowerSeries::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

PowerSeries& PowerSeries::operator*=(double s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }
PowerSeries operator-(PowerSeries s) { return s *= -1.0; }
PowerSeries operator*(double s, PowerSeries rhs) { return rhs *= s; }
PowerSeries operator*(PowerSeries lhs, double s) { return lhs *= s; }

PowerSeries operator+(PowerSeries lhs, double c) {
    auto coeffs = lhs.coeffs();
    coeffs[0] += c;
    return PowerSeries(std::move(coeffs));
}

PowerSeries operator-(PowerSeries lhs, double c) { return std::move(lhs) + (-c); }

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
    const std::size_t n = std::min(lhs.order(), rhs.order());
    const auto& a = lhs.coeffs();
    const auto& b = rhs.coeffs();
    std::vector<double> out(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    require_zero_constant(inner, "compose");
    const std::size_t n = std::min(outer.order(), inner.order());
    const auto inner_n = inner.truncated(n);
    const auto& c = outer.coeffs();
    auto acc = PowerSeries::zero(n) + c[n];
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * inner_n + c[k];
    }
    return acc;
}

PowerSeries exp(const PowerSeries& s) {
    const auto& a = s.coeffs();
    const std::size_t n = s.order();
    std::vector<double> b(n + 1, 0.0);
    b[0] = std::exp(a[0]);
    for (std::size_t m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k) {
            acc += static_cast<double>(k) * a[k] * b[m - k];
        }
        b[m] = acc / static_cast<double>(m);
    }
    return PowerSeries(std::move(b));
}

PowerSeries log_one_minus(const PowerSeries& t) {
    require_zero_constant(t, "log_one_minus");
    std::vector<double> outer(t.order() + 1, 0.0);
    for (std::size_t k = 1; k < outer.size(); ++k) {
        outer[k] = -1.0 / static_cast<double>(k);
    }
    return compose(PowerSeries(std::move(outer)), t);
}

PowerSeries divide_by_x(const PowerSeries& s) {
    require_zero_constant(s, "divide_by_x");
    if (s.order() == 0) {
        throw StructuralError("divide_by_x of an order-0 series leaves no coefficients");
    }
    return PowerSeries(std::vector<double>(s.coeffs().begin() + 1, s.coeffs().end()));
}

PowerSeries t_series(std::size_t order) {
    auto coeffs = std::vector<double>(order + 1, 0.0);
    double term = 1.0;  // (−1)^{k+1}/(2k+1)!
    for (std::size_t k = 1; 2 * k <= order; ++k) {
        term /= static_cast<double>((2 * k) * (2 * k + 1));
        coeffs[2 * k] = term;
        term = -term;
    }
    return PowerSeries(std::move(coeffs));
}

AsymptoticPipeline asymptotic_pipeline(std::size_t order) {
    // two divisions by x each cost one order
    AsymptoticPipeline out;
    out.t = t_series(order + 2);
    out.log_sinc = log_one_minus(out.t);
    out.log_y = -pi * divide_by_x(out.log_sinc);
    out.y = exp(out.log_y);
    out.lambda_minus_p = pi * divide_by_x(out.y - 1.0) - out.y;
    return out;
}

PowerSeries lambda_asymptotic_series(std::size_t order) {
    return asymptotic_pipeline(order).lambda_minus_p;
}

double lambda_approx(const PParam& p, std::size_t order) {
    return p.p() + lambda_asymptotic_series(order).eval(p.x());
}

double lambda_approx_remainder_estimate(const PParam& p, std::size_t order) {
    const auto s = lambda_asymptotic_series(order + 1);
    return s[order + 1] * std::pow(p.x(), static_cast<double>(order + 1));
}

}  // namespace plap
