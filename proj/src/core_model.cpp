#include "eulerblowup/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "eulerblowup/quadrature.hpp"

namespace eb {

double GasParameters::delta() const {
    return std::min(2.0, n * (gamma - 1.0));
}

GasParameters make_gas(int n, double gamma) {
    if (n < 1) throw std::invalid_argument("gas: n must be a positive integer");
    if (!(gamma > 1.0)) throw std::invalid_argument("gas: gamma must exceed 1");
    return GasParameters{n, gamma};
}

double sound_speed(const GasParameters& g, double rho, double p) {
    if (!(rho > 0.0)) throw std::invalid_argument("sound_speed: rho must be positive");
    if (!(p > 0.0)) throw std::invalid_argument("sound_speed: p must be positive");
    return std::sqrt(g.gamma * p / rho);
}

double WeightFunction::value(double r) const {
    r = std::abs(r);
    if (r < inner_radius) return 1.0 - B * r * r;
    if (r <= R) {
        double d = r - R;
        return C * d * d;
    }
    return 0.0;
}

double WeightFunction::derivative(double r) const {
    r = std::abs(r);
    if (r < inner_radius) return -2.0 * B * r;
    if (r <= R) return 2.0 * C * (r - R);
    return 0.0;
}

WeightFunction make_weight(double R, double k, int n) {
    if (!(R > 0.0)) throw std::invalid_argument("weight: R must be positive");
    if (!(k > 1.0)) throw std::invalid_argument("weight: k must exceed 1");
    WeightFunction w;
    w.R = R;
    w.k = k;
    w.B = k / (R * R * (k - 1.0));
    w.C = w.B * (k - 1.0);
    w.inner_radius = R - R / k;
    const double breaks[] = {w.inner_radius};
    w.K = integrate_radial([&w](double r) { return w.value(r); }, n, 0.0, R, breaks);
    return w;
}

double weight_ball_integral(const WeightFunction& w, int n, double r) {
    if (r <= 0.0) return 0.0;
    if (r >= w.R) return w.K;
    std::vector<double> breaks;
    if (w.inner_radius < r) breaks.push_back(w.inner_radius);
    return integrate_radial([&w](double s) { return w.value(s); }, n, 0.0, r,
                            breaks);
}

ConstantsBundle derived_constants(const GasParameters& g, const WeightFunction& w,
                                  double entropy_inf) {
    if (!(w.k > g.n))
        throw std::invalid_argument("derived_constants: requires k > n");
    if (!std::isfinite(entropy_inf))
        throw std::invalid_argument("derived_constants: entropy_inf must be finite");
    ConstantsBundle c;
    c.gas = g;
    c.weight = w;
    c.entropy_inf = entropy_inf;
    c.delta = g.delta();
    c.omega_n = unit_ball_volume(g.n);
    double q = g.gamma / (g.gamma - 1.0);
    const double breaks[] = {w.inner_radius};
    c.phi_power_integral = integrate_radial(
        [&w, q](double r) { return std::pow(w.value(r), q); }, g.n, 0.0, w.R, breaks);
    c.A1 = (w.k - g.n) * std::exp(entropy_inf) *
           std::pow(c.phi_power_integral, 1.0 - g.gamma);
    c.A2 = std::max(2.0, (g.gamma - 1.0) * w.k);
    return c;
}

double moment_ceiling(const ConstantsBundle& c, double E) {
    if (!(E > 0.0)) throw std::invalid_argument("moment_ceiling: E must be positive");
    double g = c.gas.gamma;
    return std::pow((g - 1.0) * (c.weight.k - c.gas.n) * E / c.A1, 1.0 / g);
}

double potential_minimum_z(const ConstantsBundle& c, double E) {
    if (!(E > 0.0)) throw std::invalid_argument("potential_minimum_z: E must be positive");
    return std::pow(c.A2 * E / c.A1, 1.0 / c.gas.gamma);
}

Background make_background(const GasParameters& g, double rho_bar, double p_bar,
                           double R0) {
    if (!(rho_bar > 0.0) || !(p_bar > 0.0))
        throw std::invalid_argument("background: state must be positive");
    if (!(R0 > 0.0))
        throw std::invalid_argument("background: R0 must be positive");
    return Background{rho_bar, p_bar, R0, sound_speed(g, rho_bar, p_bar)};
}

}  // namespace eb
