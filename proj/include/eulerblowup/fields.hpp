#pragma once
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "eulerblowup/core_model.hpp"

namespace eb {

// Density below this is treated as vacuum: such samples carry no entropy
// information and are excluded from entropy_inf.
inline constexpr double kVacuumFloor = 1e-12;

struct RadialSample {
    double r;
    double rho;
    double v;  // radial velocity, V(x) = v(|x|) x/|x|
    double p;
};

// Radial gas state tabulated on a strictly increasing radius grid.
struct RadialField {
    std::vector<RadialSample> samples;

    double r_max() const { return samples.empty() ? 0.0 : samples.back().r; }
    RadialSample interpolate(double r) const;  // piecewise linear
};

// Throws on empty input, non-increasing radii, negative rho or p.
RadialField make_radial_field(std::vector<RadialSample> samples);

// Analytic radial gas state. r_max = +inf means the profile lives on the
// whole half-line (integrals then use the half-line substitution).
struct RadialProfile {
    std::function<double(double)> rho;
    std::function<double(double)> v;
    std::function<double(double)> p;
    double r_max = std::numeric_limits<double>::infinity();
};

RadialProfile to_profile(const RadialField& f);

// Time-dependent field, radially symmetric or not. All concrete evaluators
// in this project are radial; the general path samples directions on the
// sphere. |sigma|^2 = sum_{i<j} (V_i x_j - V_j x_i)^2 vanishes identically
// for radial fields.
struct FieldPoint {
    double rho;
    double v_r;       // radial velocity component (V . x)/|x|
    double p;
    double sigma_sq;  // angular momentum density |sigma|^2
};

class FieldEvaluator {
  public:
    virtual ~FieldEvaluator() = default;
    virtual int dim() const = 0;
    virtual bool radial() const = 0;
    virtual FieldPoint at_radius(double r, double t) const = 0;
    // Non-radial evaluators override this; x has dim() entries.
    virtual FieldPoint at_point(std::span<const double> x, double t) const;
    RadialProfile profile_at(double t) const;
};

// Wraps closed-form radial component functions as an evaluator.
class RadialEvaluator final : public FieldEvaluator {
  public:
    using Fn = std::function<double(double r, double t)>;
    RadialEvaluator(int n, Fn rho, Fn v, Fn p);
    int dim() const override { return n_; }
    bool radial() const override { return true; }
    FieldPoint at_radius(double r, double t) const override;

  private:
    int n_;
    Fn rho_, v_, p_;
};

// inf over B_R of S = ln(p / rho^gamma), ignoring vacuum samples.
double entropy_inf(const RadialField& f, const GasParameters& g, double R);
double entropy_inf(const RadialProfile& f, const GasParameters& g, double R);

// sup and inf of rho over B_R (dense grid plus local golden-section
// refinement for profiles; sample extremes for tabulated fields).
struct DensityExtremes {
    double sup;
    double inf;
};
DensityExtremes density_extremes(const RadialProfile& f, double R);
DensityExtremes density_extremes(const RadialField& f, double R);

// sup over the sphere |x| = r of fn(point). Radial evaluators reduce to a
// single evaluation; general ones sample 2^n * 32 quasi-uniform directions.
double sphere_sup(const FieldEvaluator& e, double r, double t,
                  const std::function<double(const FieldPoint&)>& fn);

}  // namespace eb
