#pragma once
#include "eulerblowup/core_model.hpp"
#include "eulerblowup/fields.hpp"

namespace eb {

// Localized moment G_phi = int rho phi(|x|) dx over B_R.
double moment_G(const RadialProfile& f, const WeightFunction& w, const GasParameters& g);
double moment_G(const RadialField& f, const WeightFunction& w, const GasParameters& g);

// G'_phi = int (phi'(|x|)/|x|) (V.x) rho dx, which for radial data is
// int phi'(r) v(r) rho(r) dx. Finite at the origin since phi'(r)/r -> -2B.
double moment_G_prime(const RadialProfile& f, const WeightFunction& w,
                      const GasParameters& g);
double moment_G_prime(const RadialField& f, const WeightFunction& w,
                      const GasParameters& g);

// Q_phi = G_phi - rho_bar K (Case II recentred moment).
double moment_Q(const RadialProfile& f, const WeightFunction& w,
                const GasParameters& g, double rho_bar);
double moment_Q(const RadialField& f, const WeightFunction& w,
                const GasParameters& g, double rho_bar);

// Classical moment (1/2) int rho |x|^2 dx over the field's whole extent.
double classical_moment(const RadialProfile& f, const GasParameters& g);

double total_mass(const RadialProfile& f, const GasParameters& g);

struct RegionalEnergies {
    double E_k;       // (1/2) int rho |V|^2
    double E_p;       // (gamma-1)^-1 int p
    double E_total;   // E_k + E_p
    double E_omega1;  // total energy density over Omega_1 = B_(R-R/k)
    double E_omega2;  // total energy density over the ring Omega_2
};
RegionalEnergies regional_energies(const RadialProfile& f, const WeightFunction& w,
                                   const GasParameters& g);

// Case II perturbation energy at time t:
//   e(t) = E_k + (gamma-1)^-1 int_{B_(R0+sigma t)} (p - p_bar) dx.
double case2_energy(const RadialProfile& f, const GasParameters& g,
                    const Background& bg, double t);

struct MomentSample {
    double t;
    double G;
    double G_prime;
    double E_k;
    double E_p;
    double E_omega1;
    double E_omega2;
};
MomentSample moment_sample(const FieldEvaluator& e, const WeightFunction& w,
                           const GasParameters& g, double t);

// Hoelder bound G_phi^gamma <= exp(-entropy_inf) int_{B_R} p dx *
// (int phi^(gamma/(gamma-1)) dx)^(gamma-1).
struct HolderCheck {
    double lhs;
    double rhs;
    bool satisfied;
};
HolderCheck holder_check(const RadialProfile& f, const ConstantsBundle& c);
HolderCheck holder_check(const RadialField& f, const ConstantsBundle& c);

// Verifies the exact expression for G_phi'' against a Richardson-extrapolated
// centered second difference of moment_G at time t:
//   G'' = -2B (int_O1 rho|V|^2 + n int_O1 p)
//         +2C (int_O2 rho|V|^2 + n int_O2 p - R int_O2 rho|sigma|^2/|x|^3
//              - (n-1) R int_O2 p/|x|).
struct SecondDerivativeCheck {
    double finite_difference;
    double identity_rhs;
    double residual;  // |difference| / max(1, |rhs|)
};
SecondDerivativeCheck second_derivative_identity_check(const FieldEvaluator& e,
                                                       const WeightFunction& w,
                                                       const GasParameters& g,
                                                       double t, double dt);

}  // namespace eb
