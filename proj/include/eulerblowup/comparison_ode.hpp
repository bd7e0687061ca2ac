#pragma once
#include <optional>
#include <vector>

#include "eulerblowup/core_model.hpp"

namespace eb {

// z'' = 2B (A1 z^gamma - A2 E), z(0) = z0, z'(0) = z0_prime.
// c is the first-integral constant, fixed so that f(z0) = z0_prime^2.
struct NonlinearComparisonProblem {
    double B;
    double A1;
    double A2;
    double E;
    double gamma;
    double z0;
    double z0_prime;
    double c;
};

NonlinearComparisonProblem make_comparison_problem(const ConstantsBundle& cb,
                                                   double E, double z0,
                                                   double z0_prime);
// For synthetic problems in tests and sweeps.
NonlinearComparisonProblem make_comparison_problem_raw(double B, double A1,
                                                       double A2, double E,
                                                       double gamma, double z0,
                                                       double z0_prime);

// Energy level f(z) = 4B (A1 z^(gamma+1)/(gamma+1) - A2 E z) + c, so that
// the phase curve of the problem is q = +-sqrt(f(z)).
double f_eval(const NonlinearComparisonProblem& p, double z);
double f_prime(const NonlinearComparisonProblem& p, double z);

// Root layout of f on (z0, inf). case_id 1: no roots, the trajectory runs
// away and never certifies blowup. case_id 2: a smaller root z_star exists
// (possibly a double root at the minimum, flagged degenerate).
struct RootStructure {
    int case_id;
    double z_star;       // smaller positive root when case 2, NaN otherwise
    bool degenerate;     // double root: trajectory only approaches z_star
    double G_plus;       // ((gamma-1)(k-n) E / A1)^(1/gamma)
    double G_plusplus;   // (A2 E / A1)^(1/gamma), location of min f
    double z_plus;       // min{total mass, G_plus}
    double f_min;        // f at the minimum (f(z0_clamped) for A1 = 0)
};
// Throws if z0 >= G_plusplus: admissible data always sit strictly below the
// potential minimum, so a violation is an input error.
RootStructure root_structure(const NonlinearComparisonProblem& p,
                             double k_minus_n, double total_mass);

struct TrajectoryPoint {
    double t;
    double z;
    double z_prime;
};

struct ComparisonTrajectory {
    std::vector<TrajectoryPoint> points;            // accepted steps
    std::optional<double> zero_crossing_time;
    bool escaped = false;                           // z ran past the guard cap
    TrajectoryPoint state_at(double t) const;       // cubic Hermite in between
};

// Adaptive embedded Runge-Kutta (Dormand-Prince 4/5), relative tolerance
// 1e-10. Stops at the first zero crossing of z (Hermite-interpolated time)
// or at the horizon. Throws on step-size underflow.
ComparisonTrajectory integrate_comparison(const NonlinearComparisonProblem& p,
                                          double horizon);

// T from the quadrature of dz/sqrt(f). Case 1 and degenerate double roots
// give +inf. Simple-root endpoints are handled with the substitution
// u = sqrt(z_star - z), which makes the integrand smooth.
double blowup_time_quadrature(const NonlinearComparisonProblem& p,
                              const RootStructure& rs);

// q'' = kappa_sq q + P(t) with polynomial P(t) = sum P_coeffs[j] t^j.
struct LinearComparisonProblem {
    double kappa_sq;
    std::vector<double> P_coeffs;
    double z0;
    double z0_prime;
};

// Assembles the recentred-moment bound problem: kappa^2 = 2 gamma B A1
// (rho_bar K)^(gamma-1), P(t) = 2B (A1 (rho_bar K)^gamma - A2 (e0 + p_bar
// omega_n (R0 + sigma t)^n)), z0 = G0 - rho_bar K, z0' = G0'.
LinearComparisonProblem make_linear_problem(const ConstantsBundle& cb,
                                            const Background& bg, double e0,
                                            double G0, double G0_prime);

// Q(t) = C1 e^(kappa t) + C2 e^(-kappa t) + particular polynomial, found by
// undetermined coefficients.
struct LinearClosedForm {
    double kappa;
    double C1;
    double C2;
    std::vector<double> particular;
    double value(double t) const;
    double derivative(double t) const;
};
LinearClosedForm linear_closed_form(const LinearComparisonProblem& p);

// Phase-plane polylines for the figure emitters.
struct PhasePoint {
    double z;
    double q;
};
// Closed loop (z, +sqrt f) left to right then (z, -sqrt f) back, restricted
// to [z_lo, z_hi] intersected with {f >= 0}.
std::vector<PhasePoint> phase_curve(const NonlinearComparisonProblem& p,
                                    double z_lo, double z_hi, int count);
// Velocity envelope q^2 = 8 C z (E - A1 z^gamma / ((gamma-1)(k-n))) for any
// admissible field; returns the squared bound (negative past its zero).
double envelope_sq(const ConstantsBundle& cb, double E, double z);
// Loop over [0, z at which the envelope closes].
std::vector<PhasePoint> envelope_curve(const ConstantsBundle& cb, double E,
                                       int count);

}  // namespace eb
