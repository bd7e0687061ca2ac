#pragma once

namespace eb {

// Polytropic gas in n space dimensions, p = exp(S) rho^gamma.
struct GasParameters {
    int n;
    double gamma;

    // delta = min{2, n(gamma-1)}
    double delta() const;
};

GasParameters make_gas(int n, double gamma);

// Local sound speed c = sqrt(gamma p / rho).
double sound_speed(const GasParameters& g, double rho, double p);

// Compactly supported C^1 weight on [0, R]:
//   phi(r) = 1 - B r^2            on [0, R - R/k)
//   phi(r) = C (r - R)^2          on [R - R/k, R]
//   phi(r) = 0                    for r >= R
// with B = k / (R^2 (k-1)), C = B (k-1), joined C^1 at r = R - R/k where
// phi = 1/k. K = int phi dx over R^n.
struct WeightFunction {
    double R;
    double k;
    double B;
    double C;
    double K;
    double inner_radius;  // R - R/k

    double value(double r) const;
    double derivative(double r) const;
};

// Requires R > 0 and k > 1 (k > n is checked where the gas enters).
WeightFunction make_weight(double R, double k, int n);

// int_{B_r} phi(|x|) dx for 0 <= r; saturates at K for r >= R.
double weight_ball_integral(const WeightFunction& w, int n, double r);

// Constants of the comparison machinery for a given gas, weight and
// entropy lower bound over B_R.
struct ConstantsBundle {
    GasParameters gas;
    WeightFunction weight;
    double entropy_inf;
    double delta;
    double omega_n;
    double phi_power_integral;  // int_{B_R} phi^(gamma/(gamma-1)) dx
    double A1;  // (k - n) exp(entropy_inf) * phi_power_integral^(1-gamma)
    double A2;  // max{2, (gamma-1) k}
};

// Requires k > n.
ConstantsBundle derived_constants(const GasParameters& g, const WeightFunction& w,
                                  double entropy_inf);

// G_plus = ((gamma-1)(k-n) E / A1)^(1/gamma): ceiling of G_phi under the
// energy bound E. G_plusplus = (A2 E / A1)^(1/gamma): location of the
// comparison potential's minimum. G_plus < G_plusplus always.
double moment_ceiling(const ConstantsBundle& c, double E);        // G_plus
double potential_minimum_z(const ConstantsBundle& c, double E);   // G_plusplus

// Uniform background state of Case II with its sound speed sigma and the
// initial perturbation radius R0.
struct Background {
    double rho_bar;
    double p_bar;
    double R0;
    double sigma;  // sqrt(gamma p_bar / rho_bar)

    // Perturbation support radius R0 + sigma t.
    double support_radius(double t) const { return R0 + sigma * t; }
};

// Requires rho_bar > 0, p_bar > 0, R0 > 0.
Background make_background(const GasParameters& g, double rho_bar, double p_bar,
                           double R0);

}  // namespace eb
