#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "eulerblowup/comparison_ode.hpp"
#include "eulerblowup/exact_solution.hpp"
#include "eulerblowup/moments.hpp"

using namespace eb;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Fixed-step RK4 for q'' = kappa^2 q + P(t), used as an independent check of
// the closed form.
double rk4_linear(const LinearComparisonProblem& p, double t_end, int steps) {
    double q = p.z0, dq = p.z0_prime;
    double dt = t_end / steps;
    auto P = [&p](double t) {
        double acc = 0.0;
        for (std::size_t j = p.P_coeffs.size(); j-- > 0;)
            acc = acc * t + p.P_coeffs[j];
        return acc;
    };
    auto f = [&](double t, double q_, double dq_, double& oq, double& odq) {
        oq = dq_;
        odq = p.kappa_sq * q_ + P(t);
    };
    for (int i = 0; i < steps; ++i) {
        double t = i * dt;
        double k1q, k1d, k2q, k2d, k3q, k3d, k4q, k4d;
        f(t, q, dq, k1q, k1d);
        f(t + dt / 2, q + dt / 2 * k1q, dq + dt / 2 * k1d, k2q, k2d);
        f(t + dt / 2, q + dt / 2 * k2q, dq + dt / 2 * k2d, k3q, k3d);
        f(t + dt, q + dt * k3q, dq + dt * k3d, k4q, k4d);
        q += dt / 6 * (k1q + 2 * k2q + 2 * k3q + k4q);
        dq += dt / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
    }
    return q;
}

}  // namespace

TEST_CASE("first integral is consistent at the initial point") {
    auto p = make_comparison_problem_raw(2.0, 1.3, 4.0, 40.0, 3.0, 0.8, -3.9);
    CHECK(f_eval(p, p.z0) == doctest::Approx(p.z0_prime * p.z0_prime).epsilon(1e-12));
    // f' = 4B (A1 z^gamma - A2 E) = 2 z''
    double z = 0.7;
    CHECK(f_prime(p, z) ==
          doctest::Approx(8.0 * (1.3 * z * z * z - 160.0)).epsilon(1e-12));
}

TEST_CASE("linear problem reproduces the closed-form time 1/(2 sqrt 2)") {
    // z'' = -16, z(0) = 1, z'(0) = 0: z = 1 - 8 t^2, zero at t = 1/(2 sqrt 2)
    auto p = make_comparison_problem_raw(2.0, 0.0, 4.0, 1.0, 3.0, 1.0, 0.0);
    auto rs = root_structure(p, 1.0, kInf);
    CHECK(rs.case_id == 2);
    double T = blowup_time_quadrature(p, rs);
    CHECK(T == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-10));
    auto traj = integrate_comparison(p, 1.0);
    REQUIRE(traj.zero_crossing_time.has_value());
    CHECK(*traj.zero_crossing_time == doctest::Approx(T).epsilon(1e-9));
}

TEST_CASE("reference scenario root layout and blowup time") {
    ExactSolution sol(-7.0);
    auto g = make_gas(1, 3.0);
    auto w = make_weight(1.0, 2.0, 1);
    auto cb = derived_constants(g, w, 0.0);
    auto prof = sol.initial_profile();
    double G0 = moment_G(prof, w, g);
    double G0p = moment_G_prime(prof, w, g);
    auto p = make_comparison_problem(cb, sol.total_energy(), G0, G0p);
    auto rs = root_structure(p, 1.0, sol.total_mass());
    CHECK(rs.case_id == 2);
    CHECK_FALSE(rs.degenerate);
    CHECK(rs.z_star == doctest::Approx(0.8357299617904435).epsilon(1e-10));
    CHECK(rs.z_plus == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    CHECK(rs.G_plus < rs.G_plusplus);
    double T = blowup_time_quadrature(p, rs);
    CHECK(T == doctest::Approx(0.05738293073380477).epsilon(1e-9));
}

TEST_CASE("quadrature and integration agree over random descending problems") {
    std::mt19937_64 gen(42);
    auto uni = [&gen] { return (gen() >> 11) * 0x1.0p-53; };
    int checked = 0;
    for (int attempt = 0; attempt < 5000 && checked < 30; ++attempt) {
        double B = 0.5 + 3.0 * uni();
        double A1 = 0.2 + 2.0 * uni();
        double A2 = 2.0 + 3.0 * uni();
        double E = 0.5 + 40.0 * uni();
        double gamma = 1.2 + 2.0 * uni();
        double gpp = std::pow(A2 * E / A1, 1.0 / gamma);
        double z0 = gpp * (0.15 + 0.7 * uni());
        double z0p = -6.0 + 12.0 * uni();
        auto p = make_comparison_problem_raw(B, A1, A2, E, gamma, z0, z0p);
        auto rs = root_structure(p, 1.0, kInf);
        if (rs.case_id != 2 || rs.degenerate) continue;
        double T = blowup_time_quadrature(p, rs);
        if (!std::isfinite(T) || T > 50.0) continue;
        auto traj = integrate_comparison(p, T * 1.5 + 1.0);
        REQUIRE(traj.zero_crossing_time.has_value());
        CHECK(std::abs(*traj.zero_crossing_time - T) / T <= 1e-4);
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("ascending start climbs to the turning point before falling") {
    auto p = make_comparison_problem_raw(2.0, 1.0, 4.0, 10.0, 3.0, 1.0, 6.0);
    auto rs = root_structure(p, 1.0, kInf);
    REQUIRE(rs.case_id == 2);
    CHECK(rs.z_star > p.z0);
    double T = blowup_time_quadrature(p, rs);
    auto traj = integrate_comparison(p, T * 2.0);
    REQUIRE(traj.zero_crossing_time.has_value());
    CHECK(std::abs(*traj.zero_crossing_time - T) / T <= 1e-4);
    // the trajectory actually touches z_star: bracket the highest accepted
    // step, then ternary-search the interpolant for the turning point
    std::size_t ip = 0;
    for (std::size_t i = 0; i < traj.points.size(); ++i)
        if (traj.points[i].z > traj.points[ip].z) ip = i;
    double lo = traj.points[ip > 0 ? ip - 1 : 0].t;
    double hi = traj.points[std::min(ip + 1, traj.points.size() - 1)].t;
    for (int it = 0; it < 200; ++it) {
        double m1 = lo + (hi - lo) / 3.0;
        double m2 = hi - (hi - lo) / 3.0;
        if (traj.state_at(m1).z < traj.state_at(m2).z)
            lo = m1;
        else
            hi = m2;
    }
    double z_peak = traj.state_at(0.5 * (lo + hi)).z;
    CHECK(z_peak == doctest::Approx(rs.z_star).epsilon(1e-7));
}

TEST_CASE("boundary start at the potential minimum is degenerate") {
    auto g = make_gas(1, 3.0);
    auto w = make_weight(1.0, 2.0, 1);
    auto cb = derived_constants(g, w, 0.0);
    double E = 10.0;
    double gpp = potential_minimum_z(cb, E);
    auto p = make_comparison_problem(cb, E, gpp, 0.0);
    auto rs = root_structure(p, 1.0, kInf);
    CHECK(rs.case_id == 2);
    CHECK(rs.degenerate);
    CHECK(blowup_time_quadrature(p, rs) == kInf);
    // starting above the minimum is inadmissible
    auto bad = make_comparison_problem(cb, E, gpp * 1.01, 0.0);
    CHECK_THROWS_AS(root_structure(bad, 1.0, kInf), std::invalid_argument);
}

TEST_CASE("runaway level sets report no roots") {
    // huge kinetic constant c pushes f above zero everywhere
    auto p = make_comparison_problem_raw(2.0, 1.3, 4.0, 40.0, 3.0, 0.8, 80.0);
    auto rs = root_structure(p, 1.0, kInf);
    CHECK(rs.case_id == 1);
    CHECK(std::isnan(rs.z_star));
    CHECK(blowup_time_quadrature(p, rs) == kInf);
}

TEST_CASE("closed form of the recentred bound matches RK integration") {
    auto g = make_gas(1, 3.0);
    auto w = make_weight(1.0, 2.0, 1);
    auto cb = derived_constants(g, w, 0.0);
    auto bg = make_background(g, 1.0, 1.0, 0.25);
    double e0 = 240.0 * 240.0 * 0.015625 * 1024.0 / 45045.0;
    double G0 = 1.0 * w.K;             // unperturbed density
    double G0p = 32.0 / 21.0;          // converging-bump moment derivative
    auto p = make_linear_problem(cb, bg, e0, G0, G0p);
    CHECK(std::sqrt(p.kappa_sq) == doctest::Approx(4.0352415830629695).epsilon(1e-12));
    REQUIRE(p.P_coeffs.size() == 2);
    CHECK(p.P_coeffs[0] == doctest::Approx(-329.92492247475377).epsilon(1e-12));
    CHECK(p.P_coeffs[1] == doctest::Approx(-55.42562584220407).epsilon(1e-12));
    auto cf = linear_closed_form(p);
    CHECK(cf.value(0.0) == doctest::Approx(p.z0).epsilon(1e-12));
    CHECK(cf.derivative(0.0) == doctest::Approx(p.z0_prime).epsilon(1e-10));
    CHECK(cf.value(0.12) == doctest::Approx(-2.2483031675881415).epsilon(1e-10));
    CHECK(cf.value(0.12) == doctest::Approx(rk4_linear(p, 0.12, 20000)).epsilon(1e-8));
}

TEST_CASE("quadratic forcing from a planar background") {
    auto g = make_gas(2, 2.0);
    auto w = make_weight(1.0, 3.0, 2);
    auto cb = derived_constants(g, w, 0.0);
    auto bg = make_background(g, 1.0, 0.5, 0.2);
    auto p = make_linear_problem(cb, bg, 1.0, 0.9 * w.K, 0.3);
    REQUIRE(p.P_coeffs.size() == 3);  // (R0 + sigma t)^2
    auto cf = linear_closed_form(p);
    CHECK(cf.value(0.4) == doctest::Approx(rk4_linear(p, 0.4, 20000)).epsilon(1e-9));
}

TEST_CASE("trajectory interpolation reproduces nodes and conserves energy") {
    auto p = make_comparison_problem_raw(2.0, 1.0, 4.0, 10.0, 3.0, 1.0, -1.0);
    auto traj = integrate_comparison(p, 5.0);
    REQUIRE(traj.points.size() >= 4);
    for (std::size_t i = 0; i < traj.points.size(); i += 3) {
        auto s = traj.state_at(traj.points[i].t);
        CHECK(s.z == doctest::Approx(traj.points[i].z).epsilon(1e-12));
        CHECK(s.z_prime ==
              doctest::Approx(traj.points[i].z_prime).epsilon(1e-10).scale(1.0));
    }
    // between nodes the cubic interpolant must still honor the first
    // integral z'^2 = f(z) to interpolation accuracy
    double scale = std::max(1.0, std::abs(p.c));
    for (std::size_t i = 0; i + 1 < traj.points.size(); ++i) {
        double tm = 0.5 * (traj.points[i].t + traj.points[i + 1].t);
        auto s = traj.state_at(tm);
        CHECK(std::abs(s.z_prime * s.z_prime - f_eval(p, s.z)) <= 1e-4 * scale);
    }
}

TEST_CASE("phase curves trace the level set") {
    auto p = make_comparison_problem_raw(2.0, 1.3, 4.0, 40.0, 3.0, 0.8, -3.9);
    auto pts = phase_curve(p, 0.0, 2.0, 100);
    REQUIRE(pts.size() >= 100);
    for (const auto& pt : pts) {
        double fz = f_eval(p, pt.z);
        CHECK(fz >= -1e-7);
        CHECK(pt.q * pt.q == doctest::Approx(std::max(fz, 0.0)).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("envelope closes at the moment ceiling") {
    auto g = make_gas(1, 3.0);
    auto w = make_weight(1.0, 2.0, 1);
    auto cb = derived_constants(g, w, 0.0);
    double E = 40.05530633326986;
    double gp = moment_ceiling(cb, E);
    CHECK(envelope_sq(cb, E, 0.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(envelope_sq(cb, E, gp) == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
    CHECK(envelope_sq(cb, E, 0.5 * gp) > 0.0);
    auto loop = envelope_curve(cb, E, 100);
    CHECK(loop.front().z == doctest::Approx(0.0).scale(1.0));
    CHECK(std::abs(loop.front().q) <= 1e-9);
}
