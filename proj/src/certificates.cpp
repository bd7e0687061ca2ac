#include "eulerblowup/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "eulerblowup/moments.hpp"
#include "eulerblowup/quadrature.hpp"

namespace eb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Quadrature + ODE tolerance budget: bounds are only declared violated when
// the measured extreme crosses by more than this relative margin.
constexpr double kViolationBudget = 1e-6;

bool crosses_below(double observed, double bound) {
    return observed < bound - kViolationBudget * std::max(1.0, std::abs(bound));
}
bool crosses_above(double observed, double bound) {
    return observed > bound + kViolationBudget * std::max(1.0, std::abs(bound));
}

std::vector<double> track_times(const std::vector<ObservedDensity>& obs,
                                double horizon) {
    std::vector<double> times;
    if (obs.empty()) {
        const int count = 65;
        times.reserve(count);
        for (int i = 0; i < count; ++i)
            times.push_back(horizon * i / double(count - 1));
    } else {
        for (const auto& o : obs)
            if (o.t <= horizon) times.push_back(o.t);
    }
    return times;
}

}  // namespace

bool bound_violated(double lower_on_sup, double upper_on_inf, double observed_sup,
                    double observed_inf) {
    return crosses_below(observed_sup, lower_on_sup) ||
           crosses_above(observed_inf, upper_on_inf);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        default: return "inconclusive";
    }
}

double default_delta1(const GasParameters& g) {
    return g.delta() / (2.0 * g.n * unit_ball_volume(g.n));
}

Theorem1Report check_theorem1(const FieldEvaluator& e, const GasParameters& g,
                              double E, double t_max, int time_samples,
                              double delta1, const std::vector<double>& radii) {
    const double delta = g.delta();
    const double omega = unit_ball_volume(g.n);
    if (!(delta1 >= 0.0) || !(delta1 < delta / (g.n * omega)))
        throw std::invalid_argument(
            "delta1 must lie in [0, delta/(n omega_n))");
    if (time_samples < 2 || !(t_max > 0.0) || radii.empty())
        throw std::invalid_argument("bad decay-check sampling parameters");

    Theorem1Report rep;
    rep.delta1 = delta1;
    rep.threshold = delta1 * E;

    const double inv_gm1 = g.gamma / (g.gamma - 1.0);
    for (double R : radii) {
        auto speed_of = [&](const FieldPoint& fp) {
            return std::sqrt(fp.v_r * fp.v_r + fp.sigma_sq / (R * R));
        };
        auto flux_at = [&](double t) {
            return sphere_sup(e, R, t, [&](const FieldPoint& fp) {
                const double s = speed_of(fp);
                return (0.5 * fp.rho * s * s + inv_gm1 * fp.p) * s;
            });
        };
        auto instant_at = [&](double t) {
            return sphere_sup(e, R, t, [&](const FieldPoint& fp) {
                const double s = speed_of(fp);
                return fp.rho * s * s + g.n * fp.p;
            });
        };

        const double Rn = std::pow(R, g.n);
        const double dt = t_max / (time_samples - 1);
        double prefix = 0.0;
        double prev_flux = flux_at(0.0);
        double bracket_max = instant_at(0.0);  // prefix integral is zero at t=0
        double instant_max = bracket_max;
        for (int j = 1; j < time_samples; ++j) {
            const double t = dt * j;
            const double fl = flux_at(t);
            prefix += 0.5 * dt * (prev_flux + fl);
            prev_flux = fl;
            const double inst = instant_at(t);
            instant_max = std::max(instant_max, inst);
            bracket_max = std::max(bracket_max, (delta / R) * prefix + inst);
        }
        Theorem1Entry entry;
        entry.R = R;
        entry.flux_term = Rn * (delta / R) * prefix;
        entry.instant_peak = Rn * instant_max;
        entry.F = Rn * bracket_max;
        rep.ladder.push_back(entry);
    }

    const std::size_t m = rep.ladder.size();
    double limit = rep.ladder.back().F;
    bool decaying = false;
    if (m >= 3) {
        const double f0 = rep.ladder[m - 3].F;
        const double f1 = rep.ladder[m - 2].F;
        const double f2 = rep.ladder[m - 1].F;
        const double d1 = f1 - f0, d2 = f2 - f1;
        decaying = d1 < 0.0 && d2 < 0.0;
        if (decaying && std::abs(d2 - d1) > 1e-300)
            limit = f2 - d2 * d2 / (d2 - d1);
    }
    rep.limit_estimate = limit;
    rep.decaying = decaying;

    if (limit <= rep.threshold * (1.0 + 1e-9) + 1e-15) {
        rep.verdict = Verdict::satisfied;
    } else if (!decaying && m >= 3 &&
               rep.ladder[m - 3].F > rep.threshold &&
               rep.ladder[m - 2].F > rep.threshold &&
               rep.ladder[m - 1].F > rep.threshold) {
        rep.verdict = Verdict::violated;
    } else {
        rep.verdict = Verdict::inconclusive;
    }
    return rep;
}

Theorem2Result theorem2_bounds(const RadialProfile& field0,
                               const ConstantsBundle& cb, double total_mass,
                               double E, double horizon,
                               const std::vector<ObservedDensity>& observations) {
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    const HolderCheck hc = holder_check(field0, cb);
    if (!hc.satisfied)
        throw std::invalid_argument(
            "initial data fail the moment-pressure inequality");

    const double G0 = moment_G(field0, cb.weight, cb.gas);
    const double G0p = moment_G_prime(field0, cb.weight, cb.gas);

    Theorem2Result res;
    res.problem = make_comparison_problem(cb, E, G0, G0p);
    res.roots = root_structure(res.problem, cb.weight.k - cb.gas.n, total_mass);
    res.T = blowup_time_quadrature(res.problem, res.roots);

    const ComparisonTrajectory traj = integrate_comparison(res.problem, horizon);
    const double K = cb.weight.K;
    const double upper = res.roots.z_plus / K;
    auto lower_at = [&](double t) {
        if (traj.zero_crossing_time && t >= *traj.zero_crossing_time) return 0.0;
        return std::max(traj.state_at(t).z, 0.0) / K;
    };

    const double span = std::min(res.T, horizon);
    DensityBoundTrack& tr = res.track;
    tr.times = track_times(observations, observations.empty() ? span : horizon);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        const double t = tr.times[i];
        tr.lower_bound.push_back(lower_at(t));
        tr.upper_bound.push_back(upper);
        if (!observations.empty()) {
            const auto& o = observations[i];
            tr.observed_sup.push_back(o.sup);
            tr.observed_inf.push_back(o.inf);
            // The z bounds certify smoothness only up to min(T, horizon).
            if (!tr.violation_time && t <= span &&
                (crosses_below(o.sup, tr.lower_bound.back()) ||
                 crosses_above(o.inf, tr.upper_bound.back())))
                tr.violation_time = t;
        }
    }
    return res;
}

Theorem3Verdict theorem3_verdict(const CaseIIData& data,
                                 const ConstantsBundle& cb) {
    const GasParameters& g = cb.gas;
    const WeightFunction& w = cb.weight;
    const Background& bg = data.bg;
    if (!(bg.R0 < w.inner_radius))
        throw std::invalid_argument(
            "perturbation must start inside the weight plateau");

    Theorem3Verdict v;
    const RadialProfile f = data.profile();
    v.e0 = data.perturbation_energy(g);
    v.G0 = moment_G(f, w, g);
    v.G0_prime = moment_G_prime(f, w, g);

    const double delta = g.delta();
    const double ring = cb.omega_n * std::pow(w.R, g.n) * bg.p_bar *
                        std::pow((w.k - 1.0) / w.k, g.n) *
                        (delta / (g.gamma - 1.0) - g.n);
    v.N = delta * v.e0 + ring;
    const double scale = delta * std::abs(v.e0) + std::abs(ring);
    if (std::abs(v.N) <= 1e-14 * scale) {
        v.N = 0.0;
        v.branch = "N=0";
    } else {
        v.branch = v.N > 0.0 ? "N>0" : "N<0";
    }

    // Smallest positive root of -B N t^2 + G' t + G, written to stay stable
    // across N -> 0 (where it degenerates to the line G + G' t).
    const double D = v.G0_prime * v.G0_prime + 4.0 * w.B * v.N * v.G0;
    if (D < 0.0) {
        v.T1 = kInf;
    } else {
        const double denom = -v.G0_prime + std::sqrt(D);
        v.T1 = denom > 0.0 ? 2.0 * v.G0 / denom : kInf;
    }

    v.T2 = (w.inner_radius - bg.R0) / bg.sigma;
    v.applies = std::isfinite(v.T1) && v.T1 > 0.0 &&
                v.T1 <= v.T2 * (1.0 + 1e-12);
    return v;
}

double theorem4_upper(const ConstantsBundle& cb, const Background& bg,
                      double perturbation_mass, double t) {
    const double RR = bg.support_radius(t);
    return perturbation_mass +
           bg.rho_bar * (cb.omega_n * std::pow(RR, cb.gas.n) -
                         weight_ball_integral(cb.weight, cb.gas.n, RR));
}

Theorem4Result theorem4_bounds(const CaseIIData& data, const ConstantsBundle& cb,
                               double horizon,
                               const std::vector<ObservedDensity>& observations) {
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    const GasParameters& g = cb.gas;
    const Background& bg = data.bg;
    const RadialProfile f = data.profile();

    Theorem4Result res;
    res.perturbation_mass = data.perturbation_mass(g);
    const double e0 = data.perturbation_energy(g);
    const double G0 = moment_G(f, cb.weight, g);
    const double G0p = moment_G_prime(f, cb.weight, g);
    res.problem = make_linear_problem(cb, bg, e0, G0, G0p);
    res.q_minus = linear_closed_form(res.problem);

    const double K = cb.weight.K;
    DensityBoundTrack& tr = res.track;
    tr.times = track_times(observations, horizon);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        const double t = tr.times[i];
        tr.lower_bound.push_back(bg.rho_bar + res.q_minus.value(t) / K);
        tr.upper_bound.push_back(
            bg.rho_bar + theorem4_upper(cb, bg, res.perturbation_mass, t) / K);
        if (!observations.empty()) {
            const auto& o = observations[i];
            tr.observed_sup.push_back(o.sup);
            tr.observed_inf.push_back(o.inf);
            if (!tr.violation_time &&
                (crosses_below(o.sup, tr.lower_bound.back()) ||
                 crosses_above(o.inf, tr.upper_bound.back())))
                tr.violation_time = t;
        }
    }

    // Past this time the lower bound drops below zero density and says
    // nothing; the certificate window is effectively [0, that time].
    const double floor = -bg.rho_bar * K;
    if (res.q_minus.value(0.0) >= floor) {
        double lo = 0.0, hi = horizon;
        if (res.q_minus.value(horizon) < floor) {
            for (int i = 0; i < 100; ++i) {
                const double mid = 0.5 * (lo + hi);
                (res.q_minus.value(mid) >= floor ? lo : hi) = mid;
            }
            res.trivial_lower_time = 0.5 * (lo + hi);
        }
    } else {
        res.trivial_lower_time = 0.0;
    }
    return res;
}

PhantomCheck phantom_check(const RadialProfile& field0, const ConstantsBundle& cb,
                           double total_mass, double E) {
    const double G0 = moment_G(field0, cb.weight, cb.gas);
    const double G0p = moment_G_prime(field0, cb.weight, cb.gas);
    const NonlinearComparisonProblem p = make_comparison_problem(cb, E, G0, G0p);
    const RootStructure rs = root_structure(p, cb.weight.k - cb.gas.n, total_mass);

    PhantomCheck out;
    out.G_prime_0 = G0p;
    out.z_plus = rs.z_plus;
    out.f_at_z_plus = f_eval(p, rs.z_plus);
    out.satisfied = G0p > 0.0 && out.f_at_z_plus >= 0.0;
    return out;
}

}  // namespace eb
