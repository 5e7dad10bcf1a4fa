#include "csdd/greens.hpp"
#include "csdd/post.hpp"
#include "csdd/sie.hpp"
#include "csdd/specfun.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace csdd;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Mode I crack in couple-stress elasticity";

    m.def("bessel_k", &specfun::bessel_k, py::arg("order"), py::arg("z"));
    m.def("bessel_k_scaled", &specfun::bessel_k_scaled, py::arg("order"), py::arg("z"));
    m.def("k2_reg", &specfun::k2_reg, py::arg("x_abs"), py::arg("ell"));
    m.def("k0_log_reg", &specfun::k0_log_reg, py::arg("x_abs"), py::arg("ell"));
    m.def("meijer_kernel", &specfun::meijer_kernel, py::arg("x"), py::arg("ell"));
    m.def("k3_reg", &specfun::k3_reg, py::arg("x"), py::arg("ell"));

    py::class_<greens::MaterialParams>(m, "MaterialParams")
        .def(py::init([](double mu, double nu, double ell) { return greens::MaterialParams{mu, nu, ell}; }),
             py::arg("shear_modulus") = 1.0, py::arg("poisson_ratio") = 0.3, py::arg("char_length") = 1.0)
        .def_readwrite("shear_modulus", &greens::MaterialParams::shear_modulus)
        .def_readwrite("poisson_ratio", &greens::MaterialParams::poisson_ratio)
        .def_readwrite("char_length", &greens::MaterialParams::char_length)
        .def("youngs_modulus", &greens::MaterialParams::youngs_modulus);

    py::class_<greens::DefectCharge>(m, "DefectCharge")
        .def(py::init([](double b, double om) { return greens::DefectCharge{b, om}; }), py::arg("burgers") = 0.0,
             py::arg("frank") = 0.0)
        .def_readwrite("burgers", &greens::DefectCharge::burgers)
        .def_readwrite("frank", &greens::DefectCharge::frank);

    py::class_<greens::FieldState>(m, "FieldState")
        .def_readonly("sxx", &greens::FieldState::sxx)
        .def_readonly("syy", &greens::FieldState::syy)
        .def_readonly("sxy", &greens::FieldState::sxy)
        .def_readonly("syx", &greens::FieldState::syx)
        .def_readonly("mxz", &greens::FieldState::mxz)
        .def_readonly("myz", &greens::FieldState::myz)
        .def_readonly("ux", &greens::FieldState::ux)
        .def_readonly("uy", &greens::FieldState::uy)
        .def_readonly("omega", &greens::FieldState::omega);

    m.def("line_sigma_yy", &greens::line_sigma_yy, py::arg("x"), py::arg("charge"), py::arg("material"));
    m.def("line_m_yz", &greens::line_m_yz, py::arg("x"), py::arg("charge"), py::arg("material"));
    m.def("full_field", &greens::full_field, py::arg("x"), py::arg("y"), py::arg("charge"), py::arg("material"));
    m.def(
        "semi_infinite_integral",
        [](const std::string& which, double x, double y, double ell) {
            if (which != "I10" && which != "I11")
                throw py::value_error("which must be 'I10' or 'I11'");
            return greens::semi_infinite_integral(
                which == "I10" ? greens::SemiInfinite::I10 : greens::SemiInfinite::I11, x, y, ell);
        },
        py::arg("which"), py::arg("x"), py::arg("y"), py::arg("ell"));

    py::class_<sie::CrackProblem>(m, "CrackProblem")
        .def(py::init([](double a, double sigma0, const greens::MaterialParams& mat) {
                 return sie::CrackProblem{a, sigma0, mat};
             }),
             py::arg("half_length") = 1.0, py::arg("remote_tension") = 1.0,
             py::arg("material") = greens::MaterialParams{})
        .def_readwrite("half_length", &sie::CrackProblem::half_length)
        .def_readwrite("remote_tension", &sie::CrackProblem::remote_tension)
        .def_readwrite("material", &sie::CrackProblem::material)
        .def_property_readonly("p", &sie::CrackProblem::p);

    py::class_<sie::Discretization>(m, "Discretization")
        .def(py::init<int>(), py::arg("n") = 128)
        .def_property_readonly("n", &sie::Discretization::n)
        .def_property_readonly("nodes", &sie::Discretization::nodes)
        .def_property_readonly("collocation", &sie::Discretization::collocation);

    py::class_<sie::DensitySolution>(m, "DensitySolution")
        .def_readonly("f_vals", &sie::DensitySolution::f_vals)
        .def_readonly("g_vals", &sie::DensitySolution::g_vals)
        .def_readonly("problem", &sie::DensitySolution::problem)
        .def_readonly("disc", &sie::DensitySolution::disc)
        .def_readonly("rcond", &sie::DensitySolution::rcond)
        .def_readonly("relative_residual", &sie::DensitySolution::relative_residual)
        .def_readonly("warnings", &sie::DensitySolution::warnings);

    py::register_exception<sie::SolverError>(m, "SolverError", PyExc_RuntimeError);

    m.def("kernel_k1", &sie::kernel_k1, py::arg("x"), py::arg("xi"), py::arg("a"), py::arg("ell"));
    m.def("kernel_k2", &sie::kernel_k2, py::arg("x"), py::arg("xi"), py::arg("ell"));
    m.def("kernel_k3", &sie::kernel_k3, py::arg("x"), py::arg("xi"), py::arg("ell"));
    m.def("log_quadrature_weight", &sie::log_quadrature_weight, py::arg("t"), py::arg("disc"), py::arg("p"));
    m.def(
        "solve",
        [](const sie::CrackProblem& pr, int n) {
            py::gil_scoped_release release;
            return sie::solve(pr, sie::Discretization(n));
        },
        py::arg("problem"), py::arg("n") = 128);

    py::class_<post::TipQuantities>(m, "TipQuantities")
        .def_readonly("f1", &post::TipQuantities::f1)
        .def_readonly("g1", &post::TipQuantities::g1)
        .def_readonly("K_I", &post::TipQuantities::K_I)
        .def_readonly("J", &post::TipQuantities::J)
        .def_readonly("K_I_ratio", &post::TipQuantities::K_I_ratio)
        .def_readonly("J_ratio", &post::TipQuantities::J_ratio);

    py::class_<post::CrackProfiles>(m, "CrackProfiles")
        .def_readonly("x_samples", &post::CrackProfiles::x_samples)
        .def_readonly("delta_uy", &post::CrackProfiles::delta_uy)
        .def_readonly("delta_omega", &post::CrackProfiles::delta_omega);

    py::class_<post::ClassicalBaseline>(m, "ClassicalBaseline")
        .def_readonly("K_I_closed", &post::ClassicalBaseline::K_I_closed)
        .def_readonly("K_I_discrete", &post::ClassicalBaseline::K_I_discrete)
        .def_readonly("J_closed", &post::ClassicalBaseline::J_closed)
        .def_readonly("x_samples", &post::ClassicalBaseline::x_samples)
        .def_readonly("cod_closed", &post::ClassicalBaseline::cod_closed)
        .def_readonly("cod_discrete", &post::ClassicalBaseline::cod_discrete);

    m.def("tip_quantities", &post::tip_quantities, py::arg("solution"));
    m.def(
        "endpoint_values",
        [](const sie::DensitySolution& sol) {
            const auto e = post::endpoint_values(sol);
            return py::make_tuple(e.f_plus, e.g_plus);
        },
        py::arg("solution"));
    m.def("crack_profiles", &post::crack_profiles, py::arg("solution"), py::arg("m_samples") = 101);
    m.def(
        "stress_ahead",
        [](const sie::DensitySolution& sol, double x) {
            const auto s = post::stress_ahead(sol, x);
            return py::make_tuple(s.sigma_yy, s.m_yz);
        },
        py::arg("solution"), py::arg("x"));
    m.def("stress_intensity_factor", &post::stress_intensity_factor, py::arg("solution"));
    m.def("j_integral", &post::j_integral, py::arg("solution"));
    m.def("classical_baseline", &post::classical_baseline, py::arg("problem"), py::arg("n") = 128,
          py::arg("m_samples") = 101);
}
