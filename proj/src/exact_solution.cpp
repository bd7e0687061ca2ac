#include "eulerblowup/exact_solution.hpp"

#include <cmath>
#include <stdexcept>

namespace eb {

ExactSolution::ExactSolution(double a0) : a0_(a0) {
    if (!std::isfinite(a0)) throw std::invalid_argument("exact solution: bad a0");
}

double ExactSolution::psi(double t) const {
    double a = 2.0 + a0_ * a0_;
    return std::sqrt(a * t * t + 2.0 * a0_ * t + 1.0);
}

double ExactSolution::psi_prime(double t) const {
    double a = 2.0 + a0_ * a0_;
    return (a * t + a0_) / psi(t);
}

double ExactSolution::rho(double x, double t) const {
    double ps = psi(t);
    double d = ps * ps + x * x;
    return ps * ps * ps / (d * d);
}

double ExactSolution::v(double x, double t) const {
    return psi_prime(t) / psi(t) * x;
}

double ExactSolution::p(double x, double t) const {
    double ps = psi(t);
    return 1.0 / (ps * (ps * ps + x * x));
}

double ExactSolution::total_mass() const { return 0.5 * M_PI; }

double ExactSolution::total_energy() const {
    return 0.25 * M_PI * (2.0 + a0_ * a0_);
}

double ExactSolution::potential_energy(double t) const {
    double ps = psi(t);
    return 0.5 * M_PI / (ps * ps);
}

double ExactSolution::kinetic_energy(double t) const {
    double dp = psi_prime(t);
    return 0.25 * M_PI * dp * dp;
}

double ExactSolution::classical_moment(double t) const {
    double ps = psi(t);
    return 0.25 * M_PI * ps * ps;
}

double ExactSolution::density_sup(double t) const { return 1.0 / psi(t); }

RadialProfile ExactSolution::profile(double t) const {
    RadialProfile f;
    f.rho = [*this, t](double r) { return rho(r, t); };
    f.v = [*this, t](double r) { return v(r, t); };
    f.p = [*this, t](double r) { return p(r, t); };
    return f;
}

std::shared_ptr<FieldEvaluator> ExactSolution::evaluator() const {
    auto self = *this;
    return std::make_shared<RadialEvaluator>(
        1, [self](double r, double t) { return self.rho(r, t); },
        [self](double r, double t) { return self.v(r, t); },
        [self](double r, double t) { return self.p(r, t); });
}

RadialField ExactSolution::sample(double t, double r_max, int count) const {
    if (count < 2) throw std::invalid_argument("exact solution: need >= 2 samples");
    std::vector<RadialSample> s;
    s.reserve(count);
    for (int i = 0; i < count; ++i) {
        double r = r_max * i / (count - 1);
        s.push_back({r, rho(r, t), v(r, t), p(r, t)});
    }
    return make_radial_field(std::move(s));
}

double cho_functional(const FieldEvaluator& e, double t, double r0, int levels) {
    auto value = [&](double r) {
        FieldPoint pt = e.at_radius(r, t);
        return std::abs(t * pt.v_r * r / (1.0 + r * r));
    };
    double best = 0.0, best_r = r0;
    for (int j = 0; j <= levels; ++j) {
        double r = r0 * std::pow(2.0, j);
        double v = e.radial() ? value(r)
                              : sphere_sup(e, r, t, [&](const FieldPoint& pt) {
                                    return std::abs(t * pt.v_r * r / (1.0 + r * r));
                                });
        if (v > best) { best = v; best_r = r; }
    }
    // Local refinement around the winning rung.
    double lo = best_r / 2.0, hi = best_r * 2.0;
    for (int i = 0; i < 200; ++i) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (value(m1) < value(m2)) lo = m1; else hi = m2;
    }
    return std::max(best, value(0.5 * (lo + hi)));
}

}  // namespace eb
