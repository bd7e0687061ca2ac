#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eulerblowup/case2_data.hpp"
#include "eulerblowup/certificates.hpp"
#include "eulerblowup/comparison_ode.hpp"
#include "eulerblowup/core_model.hpp"
#include "eulerblowup/exact_solution.hpp"
#include "eulerblowup/fields.hpp"
#include "eulerblowup/moments.hpp"
#include "eulerblowup/scenario.hpp"
#include "eulerblowup/version.hpp"

namespace py = pybind11;

namespace {

eb::RadialField field_from_columns(const std::vector<double>& r,
                                   const std::vector<double>& rho,
                                   const std::vector<double>& v,
                                   const std::vector<double>& p) {
    if (r.size() != rho.size() || r.size() != v.size() || r.size() != p.size())
        throw std::invalid_argument("column lengths differ");
    std::vector<eb::RadialSample> samples(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        samples[i] = {r[i], rho[i], v[i], p[i]};
    return eb::make_radial_field(std::move(samples));
}

struct FieldContext {
    eb::ConstantsBundle cb;
    eb::RadialField field;
};

FieldContext make_context(const std::vector<double>& r, const std::vector<double>& rho,
                          const std::vector<double>& v, const std::vector<double>& p,
                          int n, double gamma, double R, double k) {
    auto gas = eb::make_gas(n, gamma);
    auto w = eb::make_weight(R, k, n);
    auto field = field_from_columns(r, rho, v, p);
    double s_inf = eb::entropy_inf(field, gas, R);
    return {eb::derived_constants(gas, w, s_inf), std::move(field)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Localized-moment blowup certificates for compressible Euler flows";
    m.attr("__version__") = eb::kVersion;

    m.def(
        "constants",
        [](int n, double gamma, double R, double k, double entropy_inf) {
            auto gas = eb::make_gas(n, gamma);
            auto w = eb::make_weight(R, k, n);
            auto cb = eb::derived_constants(gas, w, entropy_inf);
            py::dict d;
            d["B"] = cb.weight.B;
            d["C"] = cb.weight.C;
            d["K"] = cb.weight.K;
            d["inner_radius"] = cb.weight.inner_radius;
            d["delta"] = cb.delta;
            d["omega_n"] = cb.omega_n;
            d["phi_power_integral"] = cb.phi_power_integral;
            d["A1"] = cb.A1;
            d["A2"] = cb.A2;
            return d;
        },
        py::arg("n"), py::arg("gamma"), py::arg("R"), py::arg("k"),
        py::arg("entropy_inf") = 0.0,
        "Weight and comparison constants for the given gas and weight");

    py::class_<eb::ExactSolution>(m, "ExactSolution")
        .def(py::init<double>(), py::arg("a0"))
        .def_property_readonly("a0", &eb::ExactSolution::a0)
        .def("psi", &eb::ExactSolution::psi)
        .def("psi_prime", &eb::ExactSolution::psi_prime)
        .def("rho", &eb::ExactSolution::rho, py::arg("x"), py::arg("t"))
        .def("v", &eb::ExactSolution::v, py::arg("x"), py::arg("t"))
        .def("p", &eb::ExactSolution::p, py::arg("x"), py::arg("t"))
        .def("total_mass", &eb::ExactSolution::total_mass)
        .def("total_energy", &eb::ExactSolution::total_energy)
        .def("potential_energy", &eb::ExactSolution::potential_energy)
        .def("kinetic_energy", &eb::ExactSolution::kinetic_energy)
        .def("classical_moment", &eb::ExactSolution::classical_moment)
        .def("density_sup", &eb::ExactSolution::density_sup);

    m.def(
        "moments",
        [](const std::vector<double>& r, const std::vector<double>& rho,
           const std::vector<double>& v, const std::vector<double>& p, int n,
           double gamma, double R, double k) {
            auto ctx = make_context(r, rho, v, p, n, gamma, R, k);
            py::dict d;
            d["G"] = eb::moment_G(ctx.field, ctx.cb.weight, ctx.cb.gas);
            d["G_prime"] = eb::moment_G_prime(ctx.field, ctx.cb.weight, ctx.cb.gas);
            d["entropy_inf"] = ctx.cb.entropy_inf;
            return d;
        },
        py::arg("r"), py::arg("rho"), py::arg("v"), py::arg("p"), py::arg("n") = 1,
        py::arg("gamma") = 3.0, py::arg("R") = 1.0, py::arg("k") = 2.0,
        "Localized moment G and G' of a tabulated radial field");

    m.def(
        "blowup_time",
        [](double B, double A1, double A2, double E, double gamma, double z0,
           double z0_prime, double k_minus_n, double mass) {
            auto p = eb::make_comparison_problem_raw(B, A1, A2, E, gamma, z0, z0_prime);
            auto rs = eb::root_structure(p, k_minus_n, mass);
            return eb::blowup_time_quadrature(p, rs);
        },
        py::arg("B"), py::arg("A1"), py::arg("A2"), py::arg("E"), py::arg("gamma"),
        py::arg("z0"), py::arg("z0_prime"), py::arg("k_minus_n") = 1.0,
        py::arg("mass") = std::numeric_limits<double>::infinity(),
        "Zero-reaching time of the comparison trajectory (inf when it never does)");

    m.def(
        "theorem3",
        [](int n, double gamma, double R, double k, double rho_bar, double p_bar,
           double R0, double a_rho, double a_v, double a_p) {
            auto gas = eb::make_gas(n, gamma);
            auto w = eb::make_weight(R, k, n);
            auto bg = eb::make_background(gas, rho_bar, p_bar, R0);
            auto data = eb::make_case2(gas, bg, a_rho, a_v, a_p);
            double s_inf = eb::entropy_inf(data.profile(), gas, R);
            auto cb = eb::derived_constants(gas, w, s_inf);
            auto t3 = eb::theorem3_verdict(data, cb);
            py::dict d;
            d["N"] = t3.N;
            d["T1"] = t3.T1;
            d["T2"] = t3.T2;
            d["G0"] = t3.G0;
            d["G0_prime"] = t3.G0_prime;
            d["e0"] = t3.e0;
            d["branch"] = t3.branch;
            d["applies"] = t3.applies;
            return d;
        },
        py::arg("n"), py::arg("gamma"), py::arg("R"), py::arg("k"),
        py::arg("rho_bar"), py::arg("p_bar"), py::arg("R0"), py::arg("a_rho"),
        py::arg("a_v"), py::arg("a_p"),
        "Compact-perturbation certificate summary");

    m.def(
        "phantom_check",
        [](const std::vector<double>& r, const std::vector<double>& rho,
           const std::vector<double>& v, const std::vector<double>& p, int n,
           double gamma, double R, double k) {
            auto ctx = make_context(r, rho, v, p, n, gamma, R, k);
            auto prof = eb::to_profile(ctx.field);
            double m_tot = eb::total_mass(prof, ctx.cb.gas);
            double E = eb::regional_energies(prof, ctx.cb.weight, ctx.cb.gas).E_total;
            auto pc = eb::phantom_check(prof, ctx.cb, m_tot, E);
            py::dict d;
            d["satisfied"] = pc.satisfied;
            d["G_prime_0"] = pc.G_prime_0;
            d["f_at_z_plus"] = pc.f_at_z_plus;
            d["z_plus"] = pc.z_plus;
            return d;
        },
        py::arg("r"), py::arg("rho"), py::arg("v"), py::arg("p"), py::arg("n") = 1,
        py::arg("gamma") = 3.0, py::arg("R") = 1.0, py::arg("k") = 2.0,
        "Open singularity condition evaluated on a tabulated radial field");
}
