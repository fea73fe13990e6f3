#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plap/core.hpp"
#include "plap/errors.hpp"
#include "plap/oracle.hpp"
#include "plap/series.hpp"
#include "plap/verify.hpp"

namespace py = pybind11;
using namespace plap;

PYBIND11_MODULE(_core, m) {
    m.doc() = "First eigenvalue of the one-dimensional p-Laplacian";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<UnknownCaseError>(m, "UnknownCaseError", PyExc_KeyError);
    py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
    py::register_exception<ToleranceError>(m, "ToleranceError", PyExc_RuntimeError);
    py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

    m.attr("ZETA_OFFSET") = zeta_offset;

    py::enum_<Regime>(m, "Regime").value("LowP", Regime::LowP).value("HighP", Regime::HighP);

    py::class_<BoundSandwich>(m, "BoundSandwich")
        .def_readonly("p", &BoundSandwich::p)
        .def_readonly("lower", &BoundSandwich::lower)
        .def_readonly("value", &BoundSandwich::value)
        .def_readonly("upper", &BoundSandwich::upper)
        .def_readonly("lower_margin", &BoundSandwich::lower_margin)
        .def_readonly("upper_margin", &BoundSandwich::upper_margin)
        .def_readonly("regime", &BoundSandwich::regime)
        .def("__repr__", [](const BoundSandwich& b) {
            return "BoundSandwich(p=" + std::to_string(b.p) + ", lower=" + std::to_string(b.lower) +
                   ", value=" + std::to_string(b.value) + ", upper=" + std::to_string(b.upper) + ")";
        });

    m.def("conjugate", &conjugate, py::arg("p"));
    m.def("lambda_exact", [](double p) { return lambda_exact(PParam(p)).value; }, py::arg("p"),
          "lambda(p) on (-1, 1)");
    m.def("log_lambda", [](double p) { return lambda_exact(PParam(p)).log_value; }, py::arg("p"));
    m.def("lambda_scaled", [](double p, double L) { return lambda_scaled(PParam(p), L).value; }, py::arg("p"),
          py::arg("L"), "lambda(p) / L**p on (-L, L)");
    m.def("lambda_prime", [](double p) { return lambda_prime(PParam(p)); }, py::arg("p"));
    m.def("asymptotic_gap", [](double p) { return asymptotic_gap(PParam(p)); }, py::arg("p"));
    m.def("bounds", [](double p) { return bounds_for(PParam(p)); }, py::arg("p"));
    m.def("sinc_bounds", [](double x) {
        const auto s = sinc_bounds(x);
        return py::make_tuple(s.lower, s.sinc, s.upper);
    }, py::arg("x"), "(lower, sin(pi x)/(pi x), upper)");
    m.def("find_pstar", &find_pstar, py::arg("L"), py::arg("tol") = 1e-12);

    m.def("series_coefficients", [](std::size_t order) { return lambda_asymptotic_series(order).coeffs(); },
          py::arg("order"), "Coefficients c_0..c_N of lambda(p) - p in powers of pi/p");
    m.def("lambda_approx", [](double p, std::size_t order) { return lambda_approx(PParam(p), order); },
          py::arg("p"), py::arg("order"));

    py::class_<ShootingResult>(m, "ShootingResult")
        .def_readonly("lambda_estimate", &ShootingResult::lambda_estimate)
        .def_readonly("residual", &ShootingResult::residual)
        .def_readonly("bisection_iterations", &ShootingResult::bisection_iterations)
        .def_readonly("ode_steps", &ShootingResult::ode_steps);
    m.def("eigenvalue_shooting", [](double p, double tol, double L) {
        ShootingOptions opts;
        opts.half_length = L;
        py::gil_scoped_release release;
        return eigenvalue_shooting(PParam(p), tol, opts);
    }, py::arg("p"), py::arg("tol") = 1e-10, py::arg("L") = 1.0);
    m.def("pi_p_quadrature", [](double p, double tol) { return pi_p_quadrature(PParam(p), tol); }, py::arg("p"),
          py::arg("tol") = 1e-12);
    m.def("pi_p_closed_form", [](double p) { return pi_p_closed_form(PParam(p)); }, py::arg("p"));

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("id", &VerificationReport::id)
        .def_readonly("samples", &VerificationReport::samples)
        .def_readonly("min_margin", &VerificationReport::min_margin)
        .def_readonly("argmin", &VerificationReport::argmin)
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("refined_rounds", &VerificationReport::refined_rounds)
        .def_readonly("lo_margin", &VerificationReport::lo_margin)
        .def_readonly("hi_margin", &VerificationReport::hi_margin);
    m.def("catalog_ids", [] {
        std::vector<std::string> ids;
        for (const auto& c : verify_catalog()) {
            ids.push_back(c.id);
        }
        return ids;
    });
    m.def("verify_case", [](const std::string& id, int samples, int refine) {
        py::gil_scoped_release release;
        return verify_case(id, samples, refine);
    }, py::arg("id"), py::arg("samples") = 10000, py::arg("refine") = 3);
    m.def("verify_all", [](int samples, int refine, unsigned threads) {
        py::gil_scoped_release release;
        return verify_all(samples, refine, threads);
    }, py::arg("samples") = 10000, py::arg("refine") = 3, py::arg("threads") = 1);
}
