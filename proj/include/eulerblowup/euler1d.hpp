#pragma once
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eulerblowup/core_model.hpp"
#include "eulerblowup/fields.hpp"

namespace eb {

struct SolverGrid {
    double x_min;
    double x_max;
    int cells;

    double h() const { return (x_max - x_min) / cells; }
    double center(int i) const { return x_min + (i + 0.5) * h(); }
};

// Conserved cell averages: density, momentum, total energy density
// p/(gamma-1) + rho v^2 / 2.
struct Conserved {
    double rho;
    double mom;
    double ener;
};

struct Primitive {
    double rho;
    double v;
    double p;
};

Primitive to_primitive(const GasParameters& g, const Conserved& c);
Conserved to_conserved(const GasParameters& g, const Primitive& w);

struct SolverState {
    GasParameters gas;
    SolverGrid grid;
    std::vector<Conserved> u;
    double t = 0.0;
    double cfl = 0.45;
};

SolverState make_solver_state(const GasParameters& g, const SolverGrid& grid,
                              const std::function<Primitive(double x)>& init,
                              double cfl = 0.45);

// Supplies ghost-cell values just outside the domain.
using BoundaryProvider = std::function<Primitive(double x, double t)>;
BoundaryProvider constant_boundary(const Primitive& w);

// Thrown when positivity cannot be restored by time-step halving; treated by
// callers as blowup evidence with a distinct flag, not as a crash.
struct SolverBreakdown : std::runtime_error {
    explicit SolverBreakdown(const std::string& msg) : std::runtime_error(msg) {}
};

struct StepInfo {
    double dt;
    int positivity_retries;
    Conserved flux_left;   // interface flux at x_min (into the domain)
    Conserved flux_right;  // interface flux at x_max (out of the domain)
};

// One Rusanov / forward-Euler update. dt = cfl h / max(|v|+c), additionally
// capped by dt_cap; halves dt on positivity failure (up to 40 times).
StepInfo step(SolverState& s, const BoundaryProvider& bc,
              double dt_cap = std::numeric_limits<double>::infinity());

// Fires when max_i |rho_{i+1}-rho_i|/h exceeds threshold_multiple times the
// reference gradient frozen at the first observation. The reference is
// floored by max(rho)/domain-length so uniform starts are not hair-trigger.
struct BlowupDetector {
    double threshold_multiple = 50.0;
    double reference = 0.0;
    std::optional<double> detected_time;
    bool breakdown = false;

    void observe(const SolverState& s);
};

double max_density_gradient(const SolverState& s);

// Radial restriction of the x > 0 half of the grid, out to r_max.
RadialField extract_radial(const SolverState& s, double r_max);

struct FieldSnapshot {
    double t;
    RadialField field;
    DensityExtremes extremes;  // over the extraction radius
};

struct RunResult {
    std::vector<FieldSnapshot> snapshots;
    BlowupDetector detector;
    double end_time;
    bool breakdown = false;
};

// Advances to t_end, landing exactly on each probe time to take a snapshot
// (extraction over [0, extraction_radius]). The detector is fed every step.
// A solver breakdown ends the run early with the flag set.
RunResult run_until(SolverState& s, const BoundaryProvider& bc, double t_end,
                    double extraction_radius,
                    const std::vector<double>& probe_times,
                    BlowupDetector detector = {});

}  // namespace eb
