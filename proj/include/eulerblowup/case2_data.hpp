#pragma once
#include "eulerblowup/fields.hpp"

namespace eb {

// Case II initial data: a uniform background (rho_bar, 0, p_bar) carrying a
// compact perturbation inside B_R0 with the C^2 bump profile (1 - s^2)^3,
// s = r/R0:
//   rho0 = rho_bar + a_rho bump, V0 = a_v x bump, p0 = p_bar + a_p bump.
// A converging preset means a_v < 0.
struct CaseIIData {
    Background bg;
    double a_rho;
    double a_v;
    double a_p;

    double bump(double r) const;
    RadialProfile profile() const;
    RadialField sample(double r_max, int count) const;

    // Perturbation mass m(0) = int (rho0 - rho_bar) dx.
    double perturbation_mass(const GasParameters& g) const;
    // Perturbation energy e(0) = E_k(0) + (gamma-1)^-1 int (p0 - p_bar) dx.
    double perturbation_energy(const GasParameters& g) const;
};

// Validates positivity of rho0 and p0 (amplitudes may be negative but must
// not exhaust the background).
CaseIIData make_case2(const GasParameters& g, const Background& bg, double a_rho,
                      double a_v, double a_p);

}  // namespace eb
