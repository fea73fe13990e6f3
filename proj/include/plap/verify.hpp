#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace plap {

/// Real interval with open/closed ends; `hi` may be +∞.
struct Domain {
    double lo;
    double hi;
    bool lo_closed;
    bool hi_closed;

    bool unbounded() const noexcept { return hi == std::numeric_limits<double>::infinity(); }
};

/// One scalar inequality: margin(t) > 0 means it holds at t.
struct InequalityCase {
    std::string id;
    std::string statement;
    std::string source;
    Domain domain;
    std::function<double(double)> margin;
    /// Both sides agree at the closed upper endpoint (only I-ZHU).
    bool equality_at_hi = false;
};

struct VerificationReport {
    std::string id;
    long long samples = 0;
    double min_margin = 0.0;
    double argmin = 0.0;
    bool passed = false;
    int refined_rounds = 0;
    /// Margin at the lower / upper endpoint, or at the inset point for open ends.
    double lo_margin = 0.0;
    double hi_margin = 0.0;
};

/// Open endpoints are sampled this far inside; p-domains reaching ∞ are
/// compactified through x = π/p and stop at x = inset.
inline constexpr double endpoint_inset = 1e-6;

/// Tolerance applied at an endpoint where the inequality degenerates to equality.
inline constexpr double equality_endpoint_tol = 1e-12;

const std::vector<InequalityCase>& verify_catalog();

const InequalityCase& find_case(const std::string& id);

VerificationReport verify_case(const InequalityCase& c, int base_samples, int refine_rounds);
VerificationReport verify_case(const std::string& id, int base_samples, int refine_rounds);

/// Runs every catalog case on up to `threads` worker threads; sorted by id.
std::vector<VerificationReport> verify_all(int base_samples, int refine_rounds, unsigned threads);

struct ConstantRow {
    std::string name;
    std::string printed;
    double recomputed;
    double abs_diff;
    /// The recomputed decimal expansion starts with the printed digits.
    bool matches;
};

std::vector<ConstantRow> reproduce_constants();

/// True when the decimal expansion of `value` begins with `printed`
/// (the printed digits are a truncation, not a rounding).
bool matches_printed_digits(double value, const std::string& printed);

struct LimitRow {
    std::string table;
    int k;
    double argument;
    double value;
    double target;
    double abs_diff;
};

struct LimitReport {
    std::vector<LimitRow> rows;
    /// λ'(1 + 10^{-k}) strictly increasing in k.
    bool lambda_prime_increasing;

    std::vector<LimitRow> table(const std::string& name) const;
};

LimitReport limit_diagnostics();

}  // namespace plap
