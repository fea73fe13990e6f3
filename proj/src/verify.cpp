#include "plap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "parallel.hpp"
#include "plap/core.hpp"
#include "plap/errors.hpp"
#include "plap/series.hpp"
#include "plap/special.hpp"

namespace plap {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double a = zeta_offset;

// g(x) of the log((π+ax)/(π−x)) lower bound. The cubic polynomial is the
// first three Maclaurin terms, so the difference is the tail
// Σ_{n>=4} ((−1)^{n+1} a^n + 1) x^n / (n π^n).
double g_margin(double x) {
    if (x < 1.0) {
        const double r = x / pi;
        double sum = 0.0;
        double rn = r * r * r;
        double an = a * a * a;
        for (int n = 4; n < 200; ++n) {
            rn *= r;
            an *= -a;  // (−1)^{n+1} a^n
            const double term = (an + 1.0) * rn / n;
            sum += term;
            if (std::fabs(term) <= 1e-18 * std::fabs(sum)) {
                break;
            }
        }
        return sum;
    }
    const double lhs = std::log1p(a * x / pi) - std::log1p(-x / pi);
    const double poly = pi / 6 * x + (12 - pi * pi) / 72 * x * x +
                        (108 - 18 * pi * pi + std::pow(pi, 4)) / (648 * pi) * x * x * x;
    return lhs - poly;
}

// h(t) = log(1−t) + t + t²/2 + t³/2 = t³/6 − Σ_{n>=4} tⁿ/n
double h_margin(double t) {
    if (t < 0.1) {
        double sum = 0.0;
        double tn = t * t * t;
        for (int n = 4; n < 200; ++n) {
            tn *= t;
            sum += tn / n;
            if (tn / n <= 1e-18 * sum) {
                break;
            }
        }
        return t * t * t / 6.0 - sum;
    }
    return std::log1p(-t) + t + 0.5 * t * t + 0.5 * t * t * t;
}

// Σ_{k>=k0} (−1)^k x^{2k+1}/(2k+1)!, the sine remainder after the x^{2k0−1} term.
double sine_tail(double x, int k0) {
    double term = x;
    for (int k = 1; k <= k0; ++k) {
        term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
    }
    double sum = term;
    for (int k = k0 + 1; k < 100; ++k) {
        term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
        if (std::fabs(term) <= 1e-18 * std::fabs(sum)) {
            break;
        }
    }
    return sum;
}

double sin3_margin(double x) {
    if (x < 1.0) {
        return sine_tail(x, 2);
    }
    return std::sin(x) - x + x * x * x / 6.0;
}

double sin7_margin(double x) {
    if (x < 2.0) {
        return sine_tail(x, 4);
    }
    const double x2 = x * x;
    return std::sin(x) - x * (1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0);
}

constexpr double logsinc_b6 = -17.0 / 15120.0;
constexpr double logsinc_b8 = -41.0 / 604800.0;

double logsinc_margin(double x) {
    if (x < series_switch) {
        // The x² and x⁴ coefficients of the bound equal those of log(sin x/x);
        // sum only the remaining differences.
        static const PowerSeries log_sinc = log_one_minus(t_series(40));
        const auto& c = log_sinc.coeffs();
        const double x2 = x * x;
        double power = x2 * x2 * x2;
        double sum = (c[6] - logsinc_b6) * power;
        power *= x2;
        sum += (c[8] - logsinc_b8) * power;
        for (std::size_t n = 10; n < c.size(); n += 2) {
            power *= x2;
            sum += c[n] * power;
        }
        return sum;
    }
    const double x2 = x * x;
    const double bound = -x2 / 6.0 - x2 * x2 / 180.0 + logsinc_b6 * x2 * x2 * x2 +
                         logsinc_b8 * x2 * x2 * x2 * x2;
    return -log_x_over_sin(x) - bound;
}

double phi_margin(double x) {
    const double c1 = (108 * pi * pi - 5 * std::pow(pi, 4) - 540) / (3240 * pi);
    return (12 - pi * pi) / 72 - c1 * x - 17 * pi / 15120 * x * x * x -
           41 * pi / 604800 * std::pow(x, 5);
}

double log_form_margin(double x) {
    return x * (std::log1p(a * x / pi) - std::log1p(-x / pi)) - pi * log_x_over_sin(x);
}

std::vector<InequalityCase> build_catalog() {
    const Domain high_p{2.0, inf, true, false};
    const Domain low_p{1.0, 2.0, false, false};
    const Domain half_pi{0.0, pi / 2, false, true};

    std::vector<InequalityCase> cat;
    cat.push_back({"I-LB-HI", "p < lambda(p)", "eigenvalue lower bound, p >= 2", high_p,
                   [](double p) { return lambda_minus_p(PParam(p)); }});
    cat.push_back({"I-UB-HI", "lambda(p) < p + pi^2/6 - 1", "eigenvalue upper bound, p >= 2", high_p,
                   [](double p) { return -asymptotic_gap(PParam(p)); }});
    cat.push_back({"I-LB-LO", "(p/(p-1))^(p-1) < lambda(p)", "eigenvalue lower bound, 1 < p < 2", low_p,
                   [](double p) { return bounds_for(PParam(p)).lower_margin; }});
    cat.push_back({"I-UB-LO", "lambda(p) < (p-1)^(1-p) (1 + pi^2/6 (p-1))^(p-1)", "eigenvalue upper bound, 1 < p < 2", low_p,
                   [](double p) { return bounds_for(PParam(p)).upper_margin; }});
    cat.push_back({"I-L13a", "p < (p/(p-1))^(p-1)", "low-p lower bound dominates p", low_p, [](double p) {
                       const double d = p - 1.0;
                       const double log_ratio = (d - 1.0) * std::log(p) - d * std::log(d);
                       return p * std::expm1(log_ratio);
                   }});
    cat.push_back({"I-L13b", "(p-1)^(1-p) (1 + pi^2/6 (p-1))^(p-1) < p + pi^2/6 - 1", "low-p upper bound below p + pi^2/6 - 1",
                   low_p, [](double p) {
                       const double x = p - 1.0;
                       const double c = pi * pi / 6;
                       const double g = std::log(x + c) + x * std::log(x) - x * std::log1p(c * x);
                       return -(p + a) * std::expm1(-g);
                   }});
    cat.push_back({"I-SINC", "((1-x)/(1+(pi^2/6-1)x))^x < sin(pi x)/(pi x) < (1-x)^x", "sinc sandwich",
                   Domain{0.0, 1.0, false, false}, [](double x) {
                       const auto m = sinc_log_margins(x);
                       const double s = sinc_bounds(x).sinc;
                       return std::min(-s * std::expm1(-m.lower), s * std::expm1(m.upper));
                   }});
    cat.push_back({"I-ZHU", "sin x / x <= 2/pi + (pi-2)/pi^3 (pi^2 - 4x^2)", "quadratic upper bound for sinc (Zhu)", half_pi,
                   [](double x) { return sinc_deficit(x) - 4 * (pi - 2) / (pi * pi * pi) * x * x; }, true});
    cat.push_back({"I-F", "f(p) = log(p-1) - log p + 4(pi-2)/(pi p) > 0", "auxiliary f(p), lower-bound proof", high_p,
                   [](double p) { return std::log1p(-1.0 / p) + 4 * (pi - 2) / (pi * p); }});
    cat.push_back({"I-G", "g(x) = log((pi+ax)/(pi-x)) - cubic > 0", "cubic lower bound for log((pi+ax)/(pi-x))", Domain{0.0, pi, false, false},
                   g_margin});
    cat.push_back({"I-H", "h(t) = log(1-t) + t + t^2/2 + t^3/2 > 0", "cubic bound for log(1-t)", Domain{0.0, 0.4, false, true},
                   h_margin});
    cat.push_back({"I-K", "k(x) = (x - sin x)/x < 2/5", "range of t = (x - sin x)/x", half_pi,
                   [](double x) { return 0.4 - sinc_deficit(x); }});
    cat.push_back({"I-SIN3", "sin x > x - x^3/6", "cubic Taylor bound for sin", Domain{0.0, pi, false, true}, sin3_margin});
    cat.push_back({"I-SIN7", "sin x > x - x^3/3! + x^5/5! - x^7/7!", "septic Taylor bound for sin", Domain{0.0, pi, false, true},
                   sin7_margin});
    cat.push_back({"I-LOGSINC", "log(sin x/x) > -x^2/6 - x^4/180 - 17x^6/15120 - 41x^8/604800", "eighth-order lower bound for log sinc",
                   half_pi, logsinc_margin});
    cat.push_back({"I-PHI", "phi(x) > 0", "polynomial factor of the upper-bound proof", half_pi, phi_margin});
    cat.push_back({"I-2.7", "x log((pi+ax)/(pi-x)) + pi log(sin x/x) > 0", "logarithmic form of the p >= 2 upper bound", half_pi, log_form_margin});
    return cat;
}

struct Sample {
    double s;
    double margin;
};

// Grid variable s: the natural variable itself on bounded domains, s = π/t on
// [lo, ∞).
struct GridMap {
    double s_lo;
    double s_hi;
    bool compact;

    double natural(double s) const { return compact ? pi / s : s; }
};

GridMap grid_for(const Domain& d) {
    if (d.unbounded()) {
        const double top = pi / d.lo;
        return {endpoint_inset, d.lo_closed ? top : top - endpoint_inset, true};
    }
    return {d.lo_closed ? d.lo : d.lo + endpoint_inset, d.hi_closed ? d.hi : d.hi - endpoint_inset, false};
}

std::string format_digits(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

const std::vector<InequalityCase>& verify_catalog() {
    static const std::vector<InequalityCase> catalog = build_catalog();
    return catalog;
}

const InequalityCase& find_case(const std::string& id) {
    for (const auto& c : verify_catalog()) {
        if (c.id == id) {
            return c;
        }
    }
    throw UnknownCaseError("unknown inequality id '" + id + "'");
}

VerificationReport verify_case(const InequalityCase& c, int base_samples, int refine_rounds) {
    if (base_samples < 1000) {
        throw DomainError("verify_case needs base_samples >= 1000");
    }
    if (refine_rounds < 0) {
        throw DomainError("refine_rounds must be >= 0");
    }
    const auto map = grid_for(c.domain);
    // With the compact map the upper p endpoint is the smallest s.
    const double equality_s = c.equality_at_hi ? (map.compact ? map.s_lo : map.s_hi) : std::nan("");

    VerificationReport rep;
    rep.id = c.id;
    rep.refined_rounds = refine_rounds;
    rep.min_margin = inf;
    bool all_finite = true;

    auto evaluate = [&](double s) {
        const double t = map.natural(s);
        const double m = c.margin(t);
        ++rep.samples;
        if (!std::isfinite(m)) {
            all_finite = false;
        }
        if (s != equality_s && m < rep.min_margin) {
            rep.min_margin = m;
            rep.argmin = t;
        }
        return Sample{s, m};
    };

    const double h0 = (map.s_hi - map.s_lo) / (base_samples - 1);
    std::vector<Sample> current;
    current.reserve(base_samples);
    for (int i = 0; i < base_samples; ++i) {
        const double s = i == base_samples - 1 ? map.s_hi : map.s_lo + h0 * i;
        current.push_back(evaluate(s));
    }
    if (map.compact) {
        rep.lo_margin = current.back().margin;
        rep.hi_margin = current.front().margin;
    } else {
        rep.lo_margin = current.front().margin;
        rep.hi_margin = current.back().margin;
    }

    constexpr std::size_t centers = 5;
    double h = h0;
    for (int round = 0; round < refine_rounds; ++round) {
        const std::size_t k = std::min(centers, current.size());
        std::partial_sort(current.begin(), current.begin() + k, current.end(),
                          [](const Sample& l, const Sample& r) { return l.margin < r.margin; });
        std::vector<Sample> next(current.begin(), current.begin() + k);
        const double fine = h / 10.0;
        for (std::size_t i = 0; i < k; ++i) {
            for (int j = -9; j <= 9; ++j) {
                const double s = next[i].s + j * fine;
                if (j == 0 || s < map.s_lo || s > map.s_hi) {
                    continue;
                }
                next.push_back(evaluate(s));
            }
        }
        current = std::move(next);
        h = fine;
    }

    rep.passed = all_finite && rep.min_margin > 0.0;
    if (c.equality_at_hi) {
        const double at_end = map.compact ? rep.lo_margin : rep.hi_margin;
        rep.passed = rep.passed && at_end >= -equality_endpoint_tol;
    }
    return rep;
}

VerificationReport verify_case(const std::string& id, int base_samples, int refine_rounds) {
    return verify_case(find_case(id), base_samples, refine_rounds);
}

std::vector<VerificationReport> verify_all(int base_samples, int refine_rounds, unsigned threads) {
    const auto& cat = verify_catalog();
    std::vector<VerificationReport> out(cat.size());
    detail::parallel_for(cat.size(), threads,
                         [&](std::size_t i) { out[i] = verify_case(cat[i], base_samples, refine_rounds); });
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.id < r.id; });
    return out;
}

bool matches_printed_digits(double value, const std::string& printed) {
    const auto dot = printed.find('.');
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
    // Extra digits so the truncated prefix is not disturbed by rounding.
    const std::string full = format_digits(value, decimals + 6);
    return full.compare(0, printed.size(), printed) == 0;
}

std::vector<ConstantRow> reproduce_constants() {
    const double pi2 = pi * pi;
    const double pi4 = pi2 * pi2;
    const double pi6 = pi4 * pi2;
    const std::vector<std::pair<std::pair<std::string, std::string>, double>> table = {
        {{"f(2) = 2(pi-2)/pi - log 2", "0.033613"}, 2 * (pi - 2) / pi - std::log(2.0)},
        {{"h(2/5) = log(3/5) + 64/125", "0.0011743"}, std::log(0.6) + 64.0 / 125.0},
        {{"phi(pi/2)", "0.0078633"}, 0.25 - 11 * pi2 / 360 + 229 * pi4 / 362880 - 41 * pi6 / 19353600},
        {{"g'(1) = 12/(pi^2+6) - log(1+pi^2/6)", "-0.21648"}, 12 / (pi2 + 6) - std::log1p(pi2 / 6)},
        {{"864 - 216pi^2 + 24pi^4 - pi^6", "108.594"}, 864 - 216 * pi2 + 24 * pi4 - pi6},
        {{"-648 + 216pi^2 - 24pi^4 + pi^6", "107.405"}, -648 + 216 * pi2 - 24 * pi4 + pi6},
        {{"108pi^2 - 5pi^4 - 540", "38.8718"}, 108 * pi2 - 5 * pi4 - 540},
        {{"k(pi/2) = (pi-2)/pi", "0.36338"}, (pi - 2) / pi},
    };
    std::vector<ConstantRow> rows;
    for (const auto& [names, value] : table) {
        const auto& [name, printed] = names;
        rows.push_back({name, printed, value, std::fabs(value - std::stod(printed)),
                        matches_printed_digits(value, printed)});
    }
    return rows;
}

std::vector<LimitRow> LimitReport::table(const std::string& name) const {
    std::vector<LimitRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [&](const LimitRow& r) { return r.table == name; });
    return out;
}

LimitReport limit_diagnostics() {
    LimitReport rep;
    rep.lambda_prime_increasing = true;
    double previous = -inf;
    for (int k = 2; k <= 6; ++k) {
        const PParam p(1.0 + std::pow(10.0, -k));
        const double v = lambda_exact(p).value;
        rep.rows.push_back({"lambda_near_one", k, p.p(), v, 1.0, std::fabs(v - 1.0)});
    }
    for (int k = 2; k <= 6; ++k) {
        const PParam p(1.0 + std::pow(10.0, -k));
        const double v = lambda_prime(p);
        rep.rows.push_back({"lambda_prime_near_one", k, p.p(), v, inf, inf});
        rep.lambda_prime_increasing = rep.lambda_prime_increasing && v > previous;
        previous = v;
    }
    for (int k = 1; k <= 5; ++k) {
        const PParam p(std::pow(10.0, k));
        const double v = lambda_minus_p(p);
        rep.rows.push_back({"gap_at_infinity", k, p.p(), v, zeta_offset, std::fabs(asymptotic_gap(p))});
    }
    for (int k = 1; k <= 5; ++k) {
        const PParam p(std::pow(10.0, k));
        const double v = lambda_prime(p);
        rep.rows.push_back({"lambda_prime_at_infinity", k, p.p(), v, 1.0, std::fabs(v - 1.0)});
    }
    for (int k = 1; k <= 6; ++k) {
        const double d = std::pow(10.0, -k);
        const double v = grouped_term(d);
        rep.rows.push_back({"grouped_term", k, pi - d, v, 0.0, std::fabs(v)});
    }
    return rep;
}

}  // namespace plap
