#include "eulerblowup/comparison_ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "eulerblowup/quadrature.hpp"

namespace eb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double potential(const NonlinearComparisonProblem& p, double z) {
    return 4.0 * p.B *
           (p.A1 * std::pow(z, p.gamma + 1.0) / (p.gamma + 1.0) - p.A2 * p.E * z);
}

void validate(const NonlinearComparisonProblem& p) {
    if (!(p.B > 0.0) || p.A1 < 0.0 || !(p.A2 > 0.0) || p.E < 0.0 ||
        !(p.gamma > 1.0) || !(p.z0 > 0.0) || !std::isfinite(p.z0_prime))
        throw std::invalid_argument("comparison problem outside its domain");
}

}  // namespace

NonlinearComparisonProblem make_comparison_problem_raw(double B, double A1,
                                                       double A2, double E,
                                                       double gamma, double z0,
                                                       double z0_prime) {
    NonlinearComparisonProblem p{B, A1, A2, E, gamma, z0, z0_prime, 0.0};
    validate(p);
    p.c = z0_prime * z0_prime - potential(p, z0);
    return p;
}

NonlinearComparisonProblem make_comparison_problem(const ConstantsBundle& cb,
                                                   double E, double z0,
                                                   double z0_prime) {
    return make_comparison_problem_raw(cb.weight.B, cb.A1, cb.A2, E,
                                       cb.gas.gamma, z0, z0_prime);
}

double f_eval(const NonlinearComparisonProblem& p, double z) {
    return potential(p, z) + p.c;
}

double f_prime(const NonlinearComparisonProblem& p, double z) {
    return 4.0 * p.B * (p.A1 * std::pow(z, p.gamma) - p.A2 * p.E);
}

RootStructure root_structure(const NonlinearComparisonProblem& p,
                             double k_minus_n, double total_mass) {
    validate(p);
    RootStructure rs;
    rs.G_plusplus = p.A1 > 0.0
                        ? std::pow(p.A2 * p.E / p.A1, 1.0 / p.gamma)
                        : kInf;
    rs.G_plus = p.A1 > 0.0
                    ? std::pow((p.gamma - 1.0) * k_minus_n * p.E / p.A1,
                               1.0 / p.gamma)
                    : kInf;
    rs.z_plus = std::min(total_mass, rs.G_plus);
    rs.z_star = kNaN;
    rs.degenerate = false;

    // Admissible data sit below the potential minimum; the boundary case
    // z0 = G_plusplus (uniform equilibrium) is allowed and lands in the
    // degenerate branch below.
    if (p.z0 > rs.G_plusplus * (1.0 + 1e-12))
        throw std::invalid_argument(
            "initial moment exceeds the potential minimum; "
            "inadmissible comparison data");

    if (p.A1 == 0.0) {
        // f is affine with slope -4 B A2 E; a positive slope has no physics
        // behind it here.
        const double slope = -4.0 * p.B * p.A2 * p.E;
        if (!(slope < 0.0))
            throw std::invalid_argument("degenerate affine level function");
        rs.case_id = 2;
        rs.z_star = p.c / (4.0 * p.B * p.A2 * p.E);
        rs.f_min = 0.0;
        return rs;
    }

    const double f_at_min = f_eval(p, rs.G_plusplus);
    rs.f_min = f_at_min;
    const double scale =
        std::max({1.0, std::abs(p.c), std::abs(potential(p, rs.G_plusplus))});
    const double tol = 1e-12 * scale;

    if (f_at_min > tol) {
        rs.case_id = 1;
        return rs;
    }
    rs.case_id = 2;
    if (std::abs(f_at_min) <= tol) {
        rs.degenerate = true;
        rs.z_star = rs.G_plusplus;
        return rs;
    }
    if (p.z0_prime == 0.0 || p.z0 >= rs.G_plusplus) {
        // f(z0) = 0 by construction and f decreases past z0, so the smaller
        // root is the start point itself.
        rs.z_star = p.z0;
        return rs;
    }

    double lo = p.z0, hi = rs.G_plusplus;
    for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f_eval(p, mid) > 0.0 ? lo : hi) = mid;
    }
    double z = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        const double step = f_eval(p, z) / f_prime(p, z);
        const double next = std::clamp(z - step, lo, hi);
        if (next == z) break;
        z = next;
    }
    rs.z_star = z;
    return rs;
}

namespace {

// Dormand-Prince 5(4) with FSAL. State y = (z, z').
struct DP45State {
    double z, zp;
};

DP45State rhs(const NonlinearComparisonProblem& p, const DP45State& y) {
    const double zg = y.z > 0.0 ? std::pow(y.z, p.gamma) : 0.0;
    return {y.zp, 2.0 * p.B * (p.A1 * zg - p.A2 * p.E)};
}

DP45State axpy(const DP45State& y, double h, const DP45State& k) {
    return {y.z + h * k.z, y.zp + h * k.zp};
}

// Cubic Hermite value and derivative on [0, 1] for data scaled by step h.
double hermite(double z0, double m0, double z1, double m1, double s) {
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * z0 + (s3 - 2 * s2 + s) * m0 +
           (-2 * s3 + 3 * s2) * z1 + (s3 - s2) * m1;
}
double hermite_deriv(double z0, double m0, double z1, double m1, double s) {
    const double s2 = s * s;
    return (6 * s2 - 6 * s) * z0 + (3 * s2 - 4 * s + 1) * m0 +
           (-6 * s2 + 6 * s) * z1 + (3 * s2 - 2 * s) * m1;
}

}  // namespace

TrajectoryPoint ComparisonTrajectory::state_at(double t) const {
    if (points.empty()) throw std::logic_error("empty trajectory");
    if (t <= points.front().t) return points.front();
    if (t >= points.back().t) return points.back();
    auto it = std::lower_bound(
        points.begin(), points.end(), t,
        [](const TrajectoryPoint& a, double v) { return a.t < v; });
    const TrajectoryPoint& b = *it;
    const TrajectoryPoint& a = *(it - 1);
    const double h = b.t - a.t;
    const double s = (t - a.t) / h;
    TrajectoryPoint out;
    out.t = t;
    out.z = hermite(a.z, h * a.z_prime, b.z, h * b.z_prime, s);
    out.z_prime =
        hermite_deriv(a.z, h * a.z_prime, b.z, h * b.z_prime, s) / h;
    return out;
}

ComparisonTrajectory integrate_comparison(const NonlinearComparisonProblem& p,
                                          double horizon) {
    validate(p);
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    constexpr double rtol = 1e-10, atol = 1e-12;
    constexpr double kEscapeCap = 1e12;

    ComparisonTrajectory traj;
    double t = 0.0;
    DP45State y{p.z0, p.z0_prime};
    traj.points.push_back({t, y.z, y.zp});
    DP45State k1 = rhs(p, y);

    double h = std::min(horizon, 0.01 * (1.0 + std::abs(y.z)) /
                                     (1.0 + std::abs(y.zp) + std::abs(k1.zp)));
    while (t < horizon) {
        h = std::min(h, horizon - t);
        if (h < 1e-14 * std::max(1.0, t))
            throw std::runtime_error(
                "comparison integration step underflow (stiff right-hand side)");

        const DP45State k2 = rhs(p, axpy(y, h * (1.0 / 5), k1));
        const DP45State k3 =
            rhs(p, {y.z + h * (3.0 / 40 * k1.z + 9.0 / 40 * k2.z),
                    y.zp + h * (3.0 / 40 * k1.zp + 9.0 / 40 * k2.zp)});
        const DP45State k4 = rhs(
            p, {y.z + h * (44.0 / 45 * k1.z - 56.0 / 15 * k2.z + 32.0 / 9 * k3.z),
                y.zp +
                    h * (44.0 / 45 * k1.zp - 56.0 / 15 * k2.zp + 32.0 / 9 * k3.zp)});
        const DP45State k5 =
            rhs(p, {y.z + h * (19372.0 / 6561 * k1.z - 25360.0 / 2187 * k2.z +
                               64448.0 / 6561 * k3.z - 212.0 / 729 * k4.z),
                    y.zp + h * (19372.0 / 6561 * k1.zp - 25360.0 / 2187 * k2.zp +
                                64448.0 / 6561 * k3.zp - 212.0 / 729 * k4.zp)});
        const DP45State k6 =
            rhs(p, {y.z + h * (9017.0 / 3168 * k1.z - 355.0 / 33 * k2.z +
                               46732.0 / 5247 * k3.z + 49.0 / 176 * k4.z -
                               5103.0 / 18656 * k5.z),
                    y.zp + h * (9017.0 / 3168 * k1.zp - 355.0 / 33 * k2.zp +
                                46732.0 / 5247 * k3.zp + 49.0 / 176 * k4.zp -
                                5103.0 / 18656 * k5.zp)});
        const DP45State y5 = {
            y.z + h * (35.0 / 384 * k1.z + 500.0 / 1113 * k3.z +
                       125.0 / 192 * k4.z - 2187.0 / 6784 * k5.z +
                       11.0 / 84 * k6.z),
            y.zp + h * (35.0 / 384 * k1.zp + 500.0 / 1113 * k3.zp +
                        125.0 / 192 * k4.zp - 2187.0 / 6784 * k5.zp +
                        11.0 / 84 * k6.zp)};
        const DP45State k7 = rhs(p, y5);
        const DP45State y4 = {
            y.z + h * (5179.0 / 57600 * k1.z + 7571.0 / 16695 * k3.z +
                       393.0 / 640 * k4.z - 92097.0 / 339200 * k5.z +
                       187.0 / 2100 * k6.z + 1.0 / 40 * k7.z),
            y.zp + h * (5179.0 / 57600 * k1.zp + 7571.0 / 16695 * k3.zp +
                        393.0 / 640 * k4.zp - 92097.0 / 339200 * k5.zp +
                        187.0 / 2100 * k6.zp + 1.0 / 40 * k7.zp)};

        const double sc_z =
            atol + rtol * std::max(std::abs(y.z), std::abs(y5.z));
        const double sc_zp =
            atol + rtol * std::max(std::abs(y.zp), std::abs(y5.zp));
        const double ez = (y5.z - y4.z) / sc_z;
        const double ezp = (y5.zp - y4.zp) / sc_zp;
        const double err = std::sqrt(0.5 * (ez * ez + ezp * ezp));

        if (err <= 1.0) {
            if (y5.z <= 0.0) {
                // The interpolating cubic has opposite signs at the step ends.
                double lo = 0.0, hi = 1.0;
                for (int i = 0; i < 80; ++i) {
                    const double mid = 0.5 * (lo + hi);
                    const double zm =
                        hermite(y.z, h * y.zp, y5.z, h * y5.zp, mid);
                    (zm > 0.0 ? lo : hi) = mid;
                }
                const double s = 0.5 * (lo + hi);
                const double tc = t + s * h;
                const double zpc =
                    hermite_deriv(y.z, h * y.zp, y5.z, h * y5.zp, s) / h;
                traj.points.push_back({tc, 0.0, zpc});
                traj.zero_crossing_time = tc;
                return traj;
            }
            t += h;
            y = y5;
            k1 = k7;
            traj.points.push_back({t, y.z, y.zp});
            if (y.z > kEscapeCap) {
                traj.escaped = true;
                return traj;
            }
        }
        const double factor =
            err == 0.0 ? 5.0
                       : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
    }
    return traj;
}

namespace {

// f(z_star - u^2) / u^2 evaluated without cancellation; treats z_star as an
// exact root. Smooth in u, with value -f'(z_star) at u = 0.
double level_over_u_sq(const NonlinearComparisonProblem& p, double z_star,
                       double u) {
    const double base = 4.0 * p.B * p.A2 * p.E;
    if (p.A1 == 0.0) return base;
    if (u == 0.0) return base - 4.0 * p.B * p.A1 * std::pow(z_star, p.gamma);
    const double x = u * u / z_star;
    if (x < 0.25) {
        const double ratio =
            std::expm1((p.gamma + 1.0) * std::log1p(-x)) / ((p.gamma + 1.0) * x);
        return base + 4.0 * p.B * p.A1 * std::pow(z_star, p.gamma) * ratio;
    }
    return f_eval(p, z_star - u * u) / (u * u);
}

// int_a^{z_star} dz / sqrt(f) via u = sqrt(z_star - z).
double time_to_turning(const NonlinearComparisonProblem& p, double z_star,
                       double a) {
    if (a >= z_star) return 0.0;
    const double U = std::sqrt(z_star - a);
    auto integrand = [&](double u) {
        const double g = std::max(level_over_u_sq(p, z_star, u), 1e-300);
        return 2.0 / std::sqrt(g);
    };
    return integrate(integrand, 0.0, U, QuadTol{1e-13, 1e-10});
}

}  // namespace

double blowup_time_quadrature(const NonlinearComparisonProblem& p,
                              const RootStructure& rs) {
    if (rs.case_id == 1 || rs.degenerate) return kInf;
    const double whole = time_to_turning(p, rs.z_star, 0.0);
    const double upper = time_to_turning(p, rs.z_star, p.z0);
    return p.z0_prime > 0.0 ? upper + whole : whole - upper;
}

LinearComparisonProblem make_linear_problem(const ConstantsBundle& cb,
                                            const Background& bg, double e0,
                                            double G0, double G0_prime) {
    const int n = cb.gas.n;
    const double B = cb.weight.B;
    const double rhoK = bg.rho_bar * cb.weight.K;
    LinearComparisonProblem lp;
    lp.kappa_sq = 2.0 * cb.gas.gamma * B * cb.A1 * std::pow(rhoK, cb.gas.gamma - 1.0);
    lp.z0 = G0 - rhoK;
    lp.z0_prime = G0_prime;

    // P(t) = 2B (A1 (rho_bar K)^gamma - A2 (e0 + p_bar omega_n (R0+sigma t)^n))
    lp.P_coeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    lp.P_coeffs[0] =
        2.0 * B * (cb.A1 * std::pow(rhoK, cb.gas.gamma) - cb.A2 * e0);
    double binom = 1.0;
    for (int j = 0; j <= n; ++j) {
        const double term = binom * std::pow(bg.R0, n - j) * std::pow(bg.sigma, j);
        lp.P_coeffs[j] -= 2.0 * B * cb.A2 * bg.p_bar * cb.omega_n * term;
        binom = binom * (n - j) / (j + 1.0);
    }
    while (lp.P_coeffs.size() > 1 && lp.P_coeffs.back() == 0.0)
        lp.P_coeffs.pop_back();
    return lp;
}

LinearClosedForm linear_closed_form(const LinearComparisonProblem& p) {
    if (!(p.kappa_sq > 0.0))
        throw std::invalid_argument("linear comparison needs kappa^2 > 0");
    LinearClosedForm cf;
    cf.kappa = std::sqrt(p.kappa_sq);

    // Undetermined coefficients, solved from the top degree down:
    // (j+2)(j+1) q_{j+2} = kappa^2 q_j + p_j.
    const std::size_t d = p.P_coeffs.size();
    cf.particular.assign(d, 0.0);
    for (std::size_t jj = d; jj-- > 0;) {
        const double upper =
            jj + 2 < d ? (jj + 2.0) * (jj + 1.0) * cf.particular[jj + 2] : 0.0;
        cf.particular[jj] = (upper - p.P_coeffs[jj]) / p.kappa_sq;
    }

    double q0 = cf.particular.empty() ? 0.0 : cf.particular[0];
    double q0p = cf.particular.size() > 1 ? cf.particular[1] : 0.0;
    const double dz = p.z0 - q0;
    const double dzp = p.z0_prime - q0p;
    cf.C1 = 0.5 * dz + 0.5 * dzp / cf.kappa;
    cf.C2 = 0.5 * dz - 0.5 * dzp / cf.kappa;
    return cf;
}

double LinearClosedForm::value(double t) const {
    double poly = 0.0;
    for (std::size_t j = particular.size(); j-- > 0;)
        poly = poly * t + particular[j];
    return C1 * std::exp(kappa * t) + C2 * std::exp(-kappa * t) + poly;
}

double LinearClosedForm::derivative(double t) const {
    double poly = 0.0;
    for (std::size_t j = particular.size(); j-- > 1;)
        poly = poly * t + j * particular[j];
    return kappa * (C1 * std::exp(kappa * t) - C2 * std::exp(-kappa * t)) + poly;
}

std::vector<PhasePoint> phase_curve(const NonlinearComparisonProblem& p,
                                    double z_lo, double z_hi, int count) {
    z_lo = std::max(z_lo, 0.0);
    if (!(z_hi > z_lo) || count < 2)
        throw std::invalid_argument("bad phase curve range");

    // Restrict to the connected component of {f >= 0} holding z0.
    const int scan = std::max(count * 8, 512);
    auto at = [&](int i) { return z_lo + (z_hi - z_lo) * i / double(scan); };
    int i0 = std::clamp(
        int(std::lround((p.z0 - z_lo) / (z_hi - z_lo) * scan)), 0, scan);
    if (f_eval(p, at(i0)) < 0.0) i0 = 0;  // z0 outside range; fall back to lo
    int left = i0, right = i0;
    while (left > 0 && f_eval(p, at(left - 1)) >= 0.0) --left;
    while (right < scan && f_eval(p, at(right + 1)) >= 0.0) ++right;

    auto refine_edge = [&](double inside, double outside) {
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (inside + outside);
            (f_eval(p, mid) >= 0.0 ? inside : outside) = mid;
        }
        return inside;
    };
    double a = at(left), b = at(right);
    if (left > 0) a = refine_edge(at(left), at(left - 1));
    if (right < scan) b = refine_edge(at(right), at(right + 1));

    std::vector<PhasePoint> pts;
    pts.reserve(2 * count);
    for (int i = 0; i < count; ++i) {
        const double z = a + (b - a) * i / double(count - 1);
        pts.push_back({z, std::sqrt(std::max(f_eval(p, z), 0.0))});
    }
    for (int i = count - 1; i >= 0; --i)
        pts.push_back({pts[i].z, -pts[i].q});
    return pts;
}

double envelope_sq(const ConstantsBundle& cb, double E, double z) {
    const double kn = cb.weight.k - cb.gas.n;
    return 8.0 * cb.weight.C * z *
           (E - cb.A1 * std::pow(z, cb.gas.gamma) / ((cb.gas.gamma - 1.0) * kn));
}

std::vector<PhasePoint> envelope_curve(const ConstantsBundle& cb, double E,
                                       int count) {
    if (count < 2) throw std::invalid_argument("bad envelope sample count");
    const double kn = cb.weight.k - cb.gas.n;
    const double z_end =
        std::pow((cb.gas.gamma - 1.0) * kn * E / cb.A1, 1.0 / cb.gas.gamma);
    std::vector<PhasePoint> pts;
    pts.reserve(2 * count);
    for (int i = 0; i < count; ++i) {
        const double z = z_end * i / double(count - 1);
        pts.push_back({z, std::sqrt(std::max(envelope_sq(cb, E, z), 0.0))});
    }
    for (int i = count - 1; i >= 0; --i)
        pts.push_back({pts[i].z, -pts[i].q});
    return pts;
}

}  // namespace eb
