#pragma once
#include <memory>

#include "eulerblowup/fields.hpp"

namespace eb {

// Globally smooth closed-form solution of the 1-D system with gamma = 3:
//   psi(t)  = sqrt((2 + a0^2) t^2 + 2 a0 t + 1)
//   V(x,t)  = psi'(t)/psi(t) x
//   rho     = psi^3 / (psi^2 + x^2)^2
//   p       = 1 / (psi (psi^2 + x^2))
// Initial data: V0 = a0 x, rho0 = 1/(1+x^2)^2, p0 = 1/(1+x^2).
class ExactSolution {
  public:
    explicit ExactSolution(double a0);

    double a0() const { return a0_; }
    double psi(double t) const;
    double psi_prime(double t) const;

    double rho(double x, double t) const;
    double v(double x, double t) const;
    double p(double x, double t) const;

    // Conserved totals over the line and the closed-form energy split.
    double total_mass() const;                 // pi/2
    double total_energy() const;               // (pi/4)(2 + a0^2)
    double potential_energy(double t) const;   // pi / (2 psi^2)
    double kinetic_energy(double t) const;     // pi psi'^2 / 4

    // Classical moment (1/2) int rho |x|^2 dx = (pi/4) psi^2.
    double classical_moment(double t) const;

    // Density sup over any ball containing the origin is at x = 0.
    double density_sup(double t) const;        // 1/psi

    RadialProfile profile(double t) const;
    RadialProfile initial_profile() const { return profile(0.0); }
    std::shared_ptr<FieldEvaluator> evaluator() const;

    // Tabulates the state at time t on a uniform radius grid.
    RadialField sample(double t, double r_max, int count) const;

  private:
    double a0_;
};

// sup_x |t (V.x) / (1 + |x|^2)| approximated over a geometric radius ladder
// r_j = r0 2^j, j = 0..levels, with local refinement near the best rung.
double cho_functional(const FieldEvaluator& e, double t, double r0 = 0.5,
                      int levels = 12);

}  // namespace eb
