#include "eulerblowup/case2_data.hpp"

#include <cmath>
#include <stdexcept>

#include "eulerblowup/quadrature.hpp"

namespace eb {

double CaseIIData::bump(double r) const {
    double s = r / bg.R0;
    if (s >= 1.0) return 0.0;
    double q = 1.0 - s * s;
    return q * q * q;
}

RadialProfile CaseIIData::profile() const {
    CaseIIData d = *this;
    RadialProfile f;
    f.rho = [d](double r) { return d.bg.rho_bar + d.a_rho * d.bump(r); };
    f.v = [d](double r) { return d.a_v * r * d.bump(r); };
    f.p = [d](double r) { return d.bg.p_bar + d.a_p * d.bump(r); };
    return f;
}

RadialField CaseIIData::sample(double r_max, int count) const {
    if (count < 2) throw std::invalid_argument("case II data: need >= 2 samples");
    RadialProfile f = profile();
    std::vector<RadialSample> s;
    s.reserve(count);
    for (int i = 0; i < count; ++i) {
        double r = r_max * i / (count - 1);
        s.push_back({r, f.rho(r), f.v(r), f.p(r)});
    }
    return make_radial_field(std::move(s));
}

double CaseIIData::perturbation_mass(const GasParameters& g) const {
    CaseIIData d = *this;
    return d.a_rho *
           integrate_radial([d](double r) { return d.bump(r); }, g.n, 0.0, bg.R0, {});
}

double CaseIIData::perturbation_energy(const GasParameters& g) const {
    CaseIIData d = *this;
    double ek = integrate_radial(
        [d](double r) {
            double rho = d.bg.rho_bar + d.a_rho * d.bump(r);
            double v = d.a_v * r * d.bump(r);
            return 0.5 * rho * v * v;
        },
        g.n, 0.0, bg.R0, {});
    double ep = d.a_p / (g.gamma - 1.0) *
                integrate_radial([d](double r) { return d.bump(r); }, g.n, 0.0,
                                 bg.R0, {});
    return ek + ep;
}

CaseIIData make_case2(const GasParameters& g, const Background& bg, double a_rho,
                      double a_v, double a_p) {
    (void)g;
    CaseIIData d{bg, a_rho, a_v, a_p};
    // The bump peaks at r = 0 with value 1.
    if (!(bg.rho_bar + std::min(0.0, a_rho) > 0.0))
        throw std::invalid_argument("case II data: rho0 not positive");
    if (!(bg.p_bar + std::min(0.0, a_p) > 0.0))
        throw std::invalid_argument("case II data: p0 not positive");
    return d;
}

}  // namespace eb
