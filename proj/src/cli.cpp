#include "plap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <thread>

#include "parallel.hpp"
#include "plap/core.hpp"
#include "plap/errors.hpp"
#include "plap/oracle.hpp"
#include "plap/series.hpp"
#include "plap/verify.hpp"

namespace plap::cli {

namespace {

constexpr long long max_grid = 10'000'000;
constexpr double shooting_rel_tol = 1e-6;
constexpr double pi_p_rel_tol = 1e-8;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string format_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return csv_escape(v);
            }
        },
        c);
}

struct Outcome {
    Table table;
    bool ok = true;
};

Outcome eval_command(double p_value, double half_length) {
    const PParam p(p_value);
    const auto lam = lambda_exact(p);
    Table t{"eval_row", {"p", "L", "lambda", "log_lambda", "lambda_prime", "lambda_scaled"}, {}};
    t.add({p.p(), half_length, lam.value, lam.log_value, lambda_prime(p), lambda_scaled(p, half_length).value});
    return {std::move(t)};
}

Outcome bounds_command(double pmin, double pmax, long long n, const std::string& spacing) {
    if (!(pmin > 1.0) || !(pmax >= pmin)) {
        throw DomainError("bounds needs 1 < pmin <= pmax");
    }
    if (n < 1 || n > max_grid) {
        throw DomainError("bounds needs 1 <= n <= 10000000");
    }
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        if (spacing == "linear") {
            grid[i] = pmin + (pmax - pmin) * f;
        } else {
            // geometric in p − 1 so the approach to p = 1 is resolved
            grid[i] = 1.0 + std::exp(std::log(pmin - 1.0) + f * (std::log(pmax - 1.0) - std::log(pmin - 1.0)));
        }
    }
    if (n > 1) {
        grid.front() = pmin;
        grid.back() = pmax;
    }
    std::vector<BoundSandwich> rows(grid.size());
    detail::parallel_for(grid.size(), thread_count(), [&](std::size_t i) { rows[i] = bounds_for(PParam(grid[i])); });

    Outcome out{{"bounds_row", {"p", "regime", "lower", "lambda", "upper", "lower_margin", "upper_margin"}, {}}};
    for (const auto& b : rows) {
        out.table.add({b.p, std::string(to_string(b.regime)), b.lower, b.value, b.upper, b.lower_margin,
                       b.upper_margin});
        out.ok = out.ok && b.lower_margin > 0.0 && b.upper_margin > 0.0;
    }
    return out;
}

Outcome series_command(long long order, std::optional<double> eval_p) {
    if (order < 0 || order > 200) {
        throw DomainError("series order must be in [0, 200]");
    }
    const auto s = lambda_asymptotic_series(static_cast<std::size_t>(order));
    if (!eval_p) {
        Outcome out{{"series_row", {"n", "coefficient"}, {}}};
        for (std::size_t k = 0; k <= s.order(); ++k) {
            out.table.add({static_cast<long long>(k), s[k]});
        }
        return out;
    }
    const PParam p(*eval_p);
    const double exact = lambda_exact(p).value;
    Outcome out{{"series_eval_row", {"n", "coefficient", "p", "approx", "exact", "abs_error"}, {}}};
    for (std::size_t k = 0; k <= s.order(); ++k) {
        const double approx = p.p() + s.truncated(k).eval(p.x());
        out.table.add({static_cast<long long>(k), s[k], p.p(), approx, exact, std::fabs(approx - exact)});
    }
    return out;
}

Outcome oracle_command(double p_value, double tol) {
    const PParam p(p_value);
    const auto shot = eigenvalue_shooting(p, tol);
    const double exact = lambda_exact(p).value;
    const double rel = std::fabs(shot.lambda_estimate - exact) / exact;
    const double quad = pi_p_quadrature(p, 1e-13);
    const double closed = pi_p_closed_form(p);
    const double quad_rel = std::fabs(quad - closed) / closed;
    const bool ok = rel <= shooting_rel_tol && quad_rel <= pi_p_rel_tol;
    Outcome out{{"oracle_row",
                 {"p", "tol", "lambda_exact", "lambda_shooting", "rel_error", "residual", "bisection_iterations",
                  "ode_steps", "pi_p_quadrature", "pi_p_closed", "pi_p_rel_error", "passed"},
                 {}},
                ok};
    out.table.add({p.p(), tol, exact, shot.lambda_estimate, rel, shot.residual,
                   static_cast<long long>(shot.bisection_iterations), static_cast<long long>(shot.ode_steps), quad,
                   closed, quad_rel, ok});
    return out;
}

Outcome verify_command(const std::string& id, long long samples, long long refine) {
    if (samples < 1000 || samples > max_grid) {
        throw DomainError("verify needs 1000 <= samples <= 10000000");
    }
    if (refine < 0 || refine > 10) {
        throw DomainError("verify needs 0 <= refine <= 10");
    }
    std::vector<VerificationReport> reports;
    if (id.empty()) {
        reports = verify_all(static_cast<int>(samples), static_cast<int>(refine), thread_count());
    } else {
        reports.push_back(verify_case(id, static_cast<int>(samples), static_cast<int>(refine)));
    }
    Outcome out{{"verify_row",
                 {"id", "source", "samples", "refined_rounds", "min_margin", "argmin", "lo_margin", "hi_margin",
                  "passed"},
                 {}}};
    for (const auto& r : reports) {
        out.table.add({r.id, find_case(r.id).source, r.samples, static_cast<long long>(r.refined_rounds),
                       r.min_margin, r.argmin, r.lo_margin, r.hi_margin, r.passed});
        out.ok = out.ok && r.passed;
    }
    return out;
}

Outcome limits_command() {
    const auto rep = limit_diagnostics();
    Outcome out{{"limit_row", {"table", "k", "argument", "value", "target", "abs_diff"}, {}},
                rep.lambda_prime_increasing};
    for (const auto& r : rep.rows) {
        out.table.add({r.table, static_cast<long long>(r.k), r.argument, r.value, r.target, r.abs_diff});
    }
    return out;
}

Outcome constants_command() {
    Outcome out{{"constant_row", {"name", "printed", "recomputed", "abs_diff", "matches"}, {}}};
    for (const auto& r : reproduce_constants()) {
        out.table.add({r.name, r.printed, r.recomputed, r.abs_diff, r.matches});
        out.ok = out.ok && r.matches;
    }
    return out;
}

Outcome pstar_command(double half_length, double tol) {
    const auto r = find_pstar_detailed(half_length, tol);
    Outcome out{{"pstar_row", {"L", "pstar", "criterion", "bracket_lo", "bracket_hi", "iterations"}, {}}};
    out.table.add({half_length, r.pstar, r.criterion, r.bracket_lo, r.bracket_hi, static_cast<long long>(r.iterations)});
    return out;
}

}  // namespace

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row width does not match the " + schema + " column count");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const Table& t, std::ostream& out) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << t.columns[i];
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_cell(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& t, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["schema"] = t.schema;
    doc["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        // JSON has no inf/nan; keep them as strings
                        if (std::isfinite(v)) {
                            obj[t.columns[i]] = v;
                        } else {
                            obj[t.columns[i]] = format_number(v);
                        }
                    } else {
                        obj[t.columns[i]] = v;
                    }
                },
                row[i]);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void write(const Table& t, Format f, std::ostream& out) {
    if (f == Format::Json) {
        write_json(t, out);
    } else {
        write_csv(t, out);
    }
}

unsigned thread_count() {
    if (const char* env = std::getenv("PLAP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) {
            throw std::invalid_argument(std::string("PLAP_THREADS must be an integer >= 1, got '") + env + "'");
        }
        return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"First eigenvalue of the one-dimensional p-Laplacian: evaluation, bounds, series, oracles"};
    app.name("plap");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    double p_value = 0.0;
    double half_length = 1.0;
    auto* eval = app.add_subcommand("eval", "lambda(p), log lambda, lambda'(p) and lambda(p, L)");
    eval->add_option("--p", p_value, "Exponent p > 1")->required();
    eval->add_option("--L", half_length, "Half-length of the interval (-L, L)");

    double pmin = 1.1, pmax = 10.0;
    long long n = 100;
    std::string spacing = "log";
    auto* bounds = app.add_subcommand("bounds", "Sandwich table over a p grid");
    bounds->add_option("--pmin", pmin, "Smallest p (> 1)")->required();
    bounds->add_option("--pmax", pmax, "Largest p")->required();
    bounds->add_option("--n", n, "Number of grid points (<= 1e7)")->required();
    bounds->add_option("--spacing", spacing, "log (geometric in p - 1) or linear")
        ->check(CLI::IsMember({"log", "linear"}));

    long long order = 2;
    std::optional<double> eval_p;
    auto* series = app.add_subcommand("series", "Maclaurin coefficients of lambda(pi/x) - pi/x");
    series->add_option("--order", order, "Truncation order N")->required();
    series->add_option("--eval-p", eval_p, "Also evaluate the truncated expansions at this p");

    double tol = 1e-10;
    auto* oracle = app.add_subcommand("oracle", "Shooting eigensolver and pi_p quadrature vs the closed form");
    oracle->add_option("--p", p_value, "Exponent p > 1")->required();
    oracle->add_option("--tol", tol, "Shooting residual tolerance");

    std::string case_id;
    bool all = false;
    long long samples = 10000;
    long long refine = 3;
    auto* verify = app.add_subcommand("verify", "Inequality falsification scan");
    auto* id_opt = verify->add_option("--id", case_id, "Single case id");
    auto* all_flag = verify->add_flag("--all", all, "Every catalog case (default)");
    id_opt->excludes(all_flag);
    verify->add_option("--samples", samples, "Base grid size");
    verify->add_option("--refine", refine, "Refinement rounds");

    auto* limits = app.add_subcommand("limits", "Convergence tables near p = 1 and p = infinity");
    auto* constants = app.add_subcommand("constants", "Recompute the printed decimal constants");

    double pstar_tol = 1e-12;
    auto* pstar = app.add_subcommand("pstar", "Critical exponent p_*(L) for L > 1");
    pstar->add_option("--L", half_length, "Half-length L > 1")->required();
    pstar->add_option("--tol", pstar_tol, "Tolerance on lambda'/lambda - log L");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        Outcome result;
        if (*eval) {
            result = eval_command(p_value, half_length);
        } else if (*bounds) {
            result = bounds_command(pmin, pmax, n, spacing);
        } else if (*series) {
            result = series_command(order, eval_p);
        } else if (*oracle) {
            result = oracle_command(p_value, tol);
        } else if (*verify) {
            result = verify_command(case_id, samples, refine);
        } else if (*limits) {
            result = limits_command();
        } else if (*constants) {
            result = constants_command();
        } else if (*pstar) {
            result = pstar_command(half_length, pstar_tol);
        }
        write(result.table, format == "json" ? Format::Json : Format::Csv, out);
        return result.ok ? 0 : 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownCaseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace plap::cli
