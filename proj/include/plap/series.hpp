#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "plap/core.hpp"

namespace plap {

/// Maclaurin polynomial c₀ + c₁x + … + c_N x^N truncated at order N.
///
/// Binary operations return a series of the smaller operand order; nothing
/// above the carried order is ever read.
class PowerSeries {
public:
    /// Order-0 zero series.
    PowerSeries();
    explicit PowerSeries(std::vector<double> coeffs);
    PowerSeries(std::initializer_list<double> coeffs);

    static PowerSeries zero(std::size_t order);
    /// The identity series x, truncated at `order` (>= 1).
    static PowerSeries identity(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    double operator[](std::size_t k) const { return coeffs_.at(k); }
    double constant() const noexcept { return coeffs_.front(); }

    /// Drops terms above `order`; never extends past the carried order.
    PowerSeries truncated(std::size_t order) const;

    /// Horner evaluation at a real point.
    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(double s);

private:
    std::vector<double> coeffs_;
};

PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs);
PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs);
PowerSeries operator-(PowerSeries s);
PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);
PowerSeries operator*(double s, PowerSeries rhs);
PowerSeries operator*(PowerSeries lhs, double s);
PowerSeries operator+(PowerSeries lhs, double c);
PowerSeries operator-(PowerSeries lhs, double c);

/// outer(inner(x)); inner must have a zero constant term.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// exp(S) via n·bₙ = Σ_{k=1..n} k·aₖ·b_{n−k}, b₀ = e^{a₀}.
PowerSeries exp(const PowerSeries& s);

/// log(1 − T) = −T − T²/2 − …; T must have a zero constant term.
PowerSeries log_one_minus(const PowerSeries& t);

/// S/x for S with zero constant term; the result has order N − 1.
PowerSeries divide_by_x(const PowerSeries& s);

/// (x − sin x)/x = x²/3! − x⁴/5! + x⁶/7! − …
PowerSeries t_series(std::size_t order);

/// Intermediate series of the large-p expansion, all in the variable x = π/p.
struct AsymptoticPipeline {
    PowerSeries t;                ///< (x − sin x)/x
    PowerSeries log_sinc;         ///< log(sin x/x) = log(1 − t)
    PowerSeries log_y;            ///< −(π/x)·log(sin x/x)
    PowerSeries y;                ///< (x/sin x)^{π/x}
    PowerSeries lambda_minus_p;   ///< (π/x)(y − 1) − y = λ(π/x) − π/x
};

AsymptoticPipeline asymptotic_pipeline(std::size_t order);

/// Maclaurin series of λ(π/x) − π/x in x, to the given order.
PowerSeries lambda_asymptotic_series(std::size_t order);

/// p + Σ_{k<=N} c_k (π/p)^k.
double lambda_approx(const PParam& p, std::size_t order);

/// First dropped term c_{N+1}(π/p)^{N+1}. A heuristic size of the truncation
/// error, not a bound.
double lambda_approx_remainder_estimate(const PParam& p, std::size_t order);

}  // namespace plap
