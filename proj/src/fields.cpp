#include "eulerblowup/fields.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace eb {

RadialSample RadialField::interpolate(double r) const {
    if (samples.empty()) throw std::logic_error("interpolate: empty field");
    if (r <= samples.front().r) return {r, samples.front().rho, samples.front().v, samples.front().p};
    if (r >= samples.back().r) return {r, samples.back().rho, samples.back().v, samples.back().p};
    auto it = std::lower_bound(samples.begin(), samples.end(), r,
                               [](const RadialSample& s, double x) { return s.r < x; });
    const RadialSample& hi = *it;
    const RadialSample& lo = *(it - 1);
    double w = (r - lo.r) / (hi.r - lo.r);
    return {r, lo.rho + w * (hi.rho - lo.rho), lo.v + w * (hi.v - lo.v),
            lo.p + w * (hi.p - lo.p)};
}

RadialField make_radial_field(std::vector<RadialSample> samples) {
    if (samples.empty())
        throw std::invalid_argument("radial field: no samples");
    for (size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (s.r < 0.0 || !std::isfinite(s.r))
            throw std::invalid_argument("radial field: bad radius");
        if (i > 0 && !(s.r > samples[i - 1].r))
            throw std::invalid_argument("radial field: radii must strictly increase");
        if (s.rho < 0.0 || s.p < 0.0 || !std::isfinite(s.rho) || !std::isfinite(s.p) ||
            !std::isfinite(s.v))
            throw std::invalid_argument("radial field: state must be finite, rho,p >= 0");
    }
    return RadialField{std::move(samples)};
}

RadialProfile to_profile(const RadialField& f) {
    auto field = std::make_shared<RadialField>(f);
    RadialProfile p;
    p.rho = [field](double r) { return field->interpolate(r).rho; };
    p.v = [field](double r) { return field->interpolate(r).v; };
    p.p = [field](double r) { return field->interpolate(r).p; };
    p.r_max = f.r_max();
    return p;
}

FieldPoint FieldEvaluator::at_point(std::span<const double> x, double t) const {
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    return at_radius(std::sqrt(r2), t);
}

RadialProfile FieldEvaluator::profile_at(double t) const {
    RadialProfile p;
    p.rho = [this, t](double r) { return at_radius(r, t).rho; };
    p.v = [this, t](double r) { return at_radius(r, t).v_r; };
    p.p = [this, t](double r) { return at_radius(r, t).p; };
    return p;
}

RadialEvaluator::RadialEvaluator(int n, Fn rho, Fn v, Fn p)
    : n_(n), rho_(std::move(rho)), v_(std::move(v)), p_(std::move(p)) {}

FieldPoint RadialEvaluator::at_radius(double r, double t) const {
    return {rho_(r, t), v_(r, t), p_(r, t), 0.0};
}

double entropy_inf(const RadialField& f, const GasParameters& g, double R) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : f.samples) {
        if (s.r > R) break;
        if (s.rho <= kVacuumFloor) continue;
        if (!(s.p > 0.0)) return -std::numeric_limits<double>::infinity();
        best = std::min(best, std::log(s.p) - g.gamma * std::log(s.rho));
    }
    return best;
}

namespace {

// Golden-section refinement of a bracketed minimum within [lo, hi].
template <class F>
double golden_min(const F& f, double lo, double hi, int iters = 80) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? fc : fd;
}

}  // namespace

double entropy_inf(const RadialProfile& f, const GasParameters& g, double R) {
    auto S = [&](double r) {
        double rho = f.rho(r);
        if (rho <= kVacuumFloor) return std::numeric_limits<double>::infinity();
        double p = f.p(r);
        if (!(p > 0.0)) return -std::numeric_limits<double>::infinity();
        return std::log(p) - g.gamma * std::log(rho);
    };
    const int grid = 4096;
    double best = std::numeric_limits<double>::infinity();
    int besti = 0;
    for (int i = 0; i <= grid; ++i) {
        double v = S(R * i / grid);
        if (v < best) { best = v; besti = i; }
    }
    if (!std::isfinite(best)) return best;
    double lo = R * std::max(0, besti - 1) / grid;
    double hi = R * std::min(grid, besti + 1) / grid;
    return std::min(best, golden_min(S, lo, hi));
}

DensityExtremes density_extremes(const RadialProfile& f, double R) {
    const int grid = 4096;
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    int ihi = 0, ilo = 0;
    double top = std::isfinite(f.r_max) ? std::min(R, f.r_max) : R;
    for (int i = 0; i <= grid; ++i) {
        double v = f.rho(top * i / grid);
        if (v > hi) { hi = v; ihi = i; }
        if (v < lo) { lo = v; ilo = i; }
    }
    auto bracket = [&](int i, double sign) {
        double a = top * std::max(0, i - 1) / grid;
        double b = top * std::min(grid, i + 1) / grid;
        return sign * golden_min([&](double r) { return sign * f.rho(r); }, a, b);
    };
    return {std::max(hi, bracket(ihi, -1.0)), std::min(lo, bracket(ilo, 1.0))};
}

DensityExtremes density_extremes(const RadialField& f, double R) {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& s : f.samples) {
        if (s.r > R) break;
        hi = std::max(hi, s.rho);
        lo = std::min(lo, s.rho);
    }
    return {hi, lo};
}

double sphere_sup(const FieldEvaluator& e, double r, double t,
                  const std::function<double(const FieldPoint&)>& fn) {
    if (e.radial()) return fn(e.at_radius(r, t));
    int n = e.dim();
    // Deterministic quasi-uniform directions: normalized points of a fixed
    // low-discrepancy sequence mapped through the Gaussian radial trick.
    size_t count = static_cast<size_t>(32) << n;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> x(n);
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        return (state >> 11) * 0x1.0p-53;
    };
    for (size_t i = 0; i < count; ++i) {
        double norm2 = 0.0;
        for (int j = 0; j < n; ++j) {
            double u1 = std::max(next(), 1e-16), u2 = next();
            x[j] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
            norm2 += x[j] * x[j];
        }
        double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;
        for (int j = 0; j < n; ++j) x[j] *= r / norm;
        best = std::max(best, fn(e.at_point(x, t)));
    }
    return best;
}

}  // namespace eb
