#pragma once
#include <optional>
#include <string>
#include <vector>

#include "eulerblowup/case2_data.hpp"
#include "eulerblowup/comparison_ode.hpp"
#include "eulerblowup/core_model.hpp"
#include "eulerblowup/fields.hpp"

namespace eb {

enum class Verdict { satisfied, violated, inconclusive };
const char* verdict_name(Verdict v);

// Necessary-decay check: a globally smooth flow with
//   liminf_{R->inf} R^n sup_{|x|=R} [ (delta/R) int_0^t (rho|V|^2/2 +
//     gamma/(gamma-1) p)|V| dtau + (rho|V|^2 + n p) ] <= delta1 E,
// delta1 < delta/(n omega_n), cannot exist; "satisfied" certifies blowup.
struct Theorem1Entry {
    double R;
    double flux_term;     // R^n (delta/R) int_0^{t_max} flux at t_max
    double instant_peak;  // R^n max_t sup_{|x|=R} (rho|V|^2 + n p)
    double F;             // R^n max_t of the combined bracket
};

struct Theorem1Report {
    std::vector<Theorem1Entry> ladder;
    double delta1;
    double threshold;        // delta1 * E
    double limit_estimate;   // Aitken-extrapolated tail of F over the ladder
    bool decaying;           // tail of the ladder is strictly decreasing
    Verdict verdict;
};

double default_delta1(const GasParameters& g);  // delta / (2 n omega_n)

Theorem1Report check_theorem1(const FieldEvaluator& e, const GasParameters& g,
                              double E, double t_max, int time_samples,
                              double delta1, const std::vector<double>& radii);

// True when an observation breaches a guaranteed bound beyond the shared
// numerical budget. Used by the trackers and by the CSV emitters.
bool bound_violated(double lower_on_sup, double upper_on_inf, double observed_sup,
                    double observed_inf);

// Density observation fed to the bound trackers (extremes over B_R).
struct ObservedDensity {
    double t;
    double sup;
    double inf;
};

struct DensityBoundTrack {
    std::vector<double> times;
    std::vector<double> lower_bound;   // on sup rho
    std::vector<double> upper_bound;   // on inf rho
    std::vector<double> observed_sup;
    std::vector<double> observed_inf;
    std::optional<double> violation_time;  // first certified crossing
};

// Bounds z_-(t)/K <= sup rho and inf rho <= z_+/K while the flow stays
// smooth; a crossing certifies loss of smoothness before that time.
struct Theorem2Result {
    DensityBoundTrack track;
    double T;  // blowup time of the comparison solution (may be +inf)
    RootStructure roots;
    NonlinearComparisonProblem problem;
};

Theorem2Result theorem2_bounds(const RadialProfile& field0,
                               const ConstantsBundle& cb, double total_mass,
                               double E, double horizon,
                               const std::vector<ObservedDensity>& observations);

// Case II certificate: the perturbation loses smoothness within T1 provided
// the sonic cone stays inside the weight plateau (T1 <= T2).
struct Theorem3Verdict {
    double N;        // delta e(0) + omega_n R^n p_bar ((k-1)/k)^n (delta/(gamma-1) - n)
    double T1;       // +inf when the moment line never reaches zero
    double T2;       // ((k-1) R / k - R0) / sigma
    double G0;
    double G0_prime;
    double e0;
    std::string branch;  // "N>0", "N<0", "N=0"
    bool applies;
};

Theorem3Verdict theorem3_verdict(const CaseIIData& data, const ConstantsBundle& cb);

// Case II two-sided bounds on the recentred moment: rho_bar + Q_-(t)/K <=
// sup rho and inf rho <= rho_bar + Q_+(t)/K.
struct Theorem4Result {
    DensityBoundTrack track;
    LinearClosedForm q_minus;
    LinearComparisonProblem problem;
    double perturbation_mass;
    // First time Q_-(t) < -rho_bar K, after which the lower bound is weaker
    // than sup rho >= 0 and carries no information.
    std::optional<double> trivial_lower_time;
};

Theorem4Result theorem4_bounds(const CaseIIData& data, const ConstantsBundle& cb,
                               double horizon,
                               const std::vector<ObservedDensity>& observations);

// Q_+(t) = m_pert + rho_bar (omega_n RR^n - int_{B_min(RR,R)} phi dx) with
// RR = R0 + sigma t. Exposed for the figure emitters and tests.
double theorem4_upper(const ConstantsBundle& cb, const Background& bg,
                      double perturbation_mass, double t);

// Finite-time singularity condition with no known realizing data: G'(0) > 0
// together with f(z_+) >= 0. The search harness hunts for admissible fields
// that would satisfy it.
struct PhantomCheck {
    bool satisfied;
    double G_prime_0;
    double f_at_z_plus;
    double z_plus;
};

PhantomCheck phantom_check(const RadialProfile& field0, const ConstantsBundle& cb,
                           double total_mass, double E);

}  // namespace eb
