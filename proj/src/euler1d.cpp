#include "eulerblowup/euler1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eb {
namespace {

Conserved physical_flux(const GasParameters& g, const Conserved& c) {
    const Primitive w = to_primitive(g, c);
    return {c.mom, c.mom * w.v + w.p, (c.ener + w.p) * w.v};
}

double signal_speed(const GasParameters& g, const Conserved& c) {
    const Primitive w = to_primitive(g, c);
    return std::abs(w.v) + std::sqrt(g.gamma * w.p / w.rho);
}

Conserved rusanov(const GasParameters& g, const Conserved& l,
                  const Conserved& r) {
    const Conserved fl = physical_flux(g, l);
    const Conserved fr = physical_flux(g, r);
    const double a = std::max(signal_speed(g, l), signal_speed(g, r));
    return {0.5 * (fl.rho + fr.rho) - 0.5 * a * (r.rho - l.rho),
            0.5 * (fl.mom + fr.mom) - 0.5 * a * (r.mom - l.mom),
            0.5 * (fl.ener + fr.ener) - 0.5 * a * (r.ener - l.ener)};
}

bool positive(const Conserved& c) {
    if (!(c.rho > 0.0)) return false;
    const double internal = c.ener - 0.5 * c.mom * c.mom / c.rho;
    return internal > 0.0 && std::isfinite(internal);
}

}  // namespace

Primitive to_primitive(const GasParameters& g, const Conserved& c) {
    const double v = c.mom / c.rho;
    return {c.rho, v, (g.gamma - 1.0) * (c.ener - 0.5 * c.rho * v * v)};
}

Conserved to_conserved(const GasParameters& g, const Primitive& w) {
    return {w.rho, w.rho * w.v, w.p / (g.gamma - 1.0) + 0.5 * w.rho * w.v * w.v};
}

SolverState make_solver_state(const GasParameters& g, const SolverGrid& grid,
                              const std::function<Primitive(double x)>& init,
                              double cfl) {
    if (grid.cells < 2 || !(grid.x_max > grid.x_min))
        throw std::invalid_argument("solver grid needs >= 2 cells, x_max > x_min");
    if (!(cfl > 0.0) || cfl > 0.9)
        throw std::invalid_argument("cfl must lie in (0, 0.9]");
    SolverState s;
    s.gas = g;
    s.grid = grid;
    s.cfl = cfl;
    s.u.resize(grid.cells);
    for (int i = 0; i < grid.cells; ++i) {
        const Primitive w = init(grid.center(i));
        if (!(w.rho > 0.0) || !(w.p > 0.0))
            throw std::invalid_argument("initial state must be positive");
        s.u[i] = to_conserved(g, w);
    }
    return s;
}

BoundaryProvider constant_boundary(const Primitive& w) {
    return [w](double, double) { return w; };
}

StepInfo step(SolverState& s, const BoundaryProvider& bc, double dt_cap) {
    const int n = s.grid.cells;
    const double h = s.grid.h();

    const Conserved ghost_l =
        to_conserved(s.gas, bc(s.grid.x_min - 0.5 * h, s.t));
    const Conserved ghost_r =
        to_conserved(s.gas, bc(s.grid.x_max + 0.5 * h, s.t));

    double speed = std::max(signal_speed(s.gas, ghost_l),
                            signal_speed(s.gas, ghost_r));
    for (const Conserved& c : s.u) speed = std::max(speed, signal_speed(s.gas, c));
    double dt = std::min(s.cfl * h / speed, dt_cap);

    std::vector<Conserved> flux(n + 1);
    flux[0] = rusanov(s.gas, ghost_l, s.u[0]);
    for (int i = 1; i < n; ++i) flux[i] = rusanov(s.gas, s.u[i - 1], s.u[i]);
    flux[n] = rusanov(s.gas, s.u[n - 1], ghost_r);

    StepInfo info;
    info.flux_left = flux[0];
    info.flux_right = flux[n];
    info.positivity_retries = 0;

    std::vector<Conserved> next(n);
    for (;;) {
        const double lam = dt / h;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            next[i] = {s.u[i].rho - lam * (flux[i + 1].rho - flux[i].rho),
                       s.u[i].mom - lam * (flux[i + 1].mom - flux[i].mom),
                       s.u[i].ener - lam * (flux[i + 1].ener - flux[i].ener)};
            if (!positive(next[i])) {
                ok = false;
                break;
            }
        }
        if (ok) break;
        if (++info.positivity_retries > 40)
            throw SolverBreakdown("positivity lost beyond time-step rescue");
        dt *= 0.5;
    }

    s.u.swap(next);
    s.t += dt;
    info.dt = dt;
    return info;
}

double max_density_gradient(const SolverState& s) {
    const double h = s.grid.h();
    double m = 0.0;
    for (std::size_t i = 1; i < s.u.size(); ++i)
        m = std::max(m, std::abs(s.u[i].rho - s.u[i - 1].rho) / h);
    return m;
}

void BlowupDetector::observe(const SolverState& s) {
    const double grad = max_density_gradient(s);
    if (reference == 0.0) {
        double rho_max = 0.0;
        for (const Conserved& c : s.u) rho_max = std::max(rho_max, c.rho);
        reference =
            std::max(grad, rho_max / (s.grid.x_max - s.grid.x_min));
    }
    if (!detected_time && grad > threshold_multiple * reference)
        detected_time = s.t;
}

RadialField extract_radial(const SolverState& s, double r_max) {
    std::vector<RadialSample> samples;
    const double h = s.grid.h();
    for (int i = 0; i < s.grid.cells; ++i) {
        const double x = s.grid.center(i);
        if (x <= 0.0 || x > r_max + h) continue;
        const Primitive w = to_primitive(s.gas, s.u[i]);
        samples.push_back({x, w.rho, w.v, w.p});
    }
    return make_radial_field(std::move(samples));
}

RunResult run_until(SolverState& s, const BoundaryProvider& bc, double t_end,
                    double extraction_radius,
                    const std::vector<double>& probe_times,
                    BlowupDetector detector) {
    RunResult res;
    res.detector = detector;
    res.detector.observe(s);  // freeze the reference gradient

    std::vector<double> probes = probe_times;
    std::sort(probes.begin(), probes.end());
    std::size_t next_probe = 0;
    auto take_due_snapshots = [&]() {
        while (next_probe < probes.size() &&
               probes[next_probe] <= s.t + 1e-12 * std::max(1.0, s.t)) {
            RadialField f = extract_radial(s, extraction_radius);
            const DensityExtremes ex = density_extremes(f, extraction_radius);
            res.snapshots.push_back({s.t, std::move(f), ex});
            ++next_probe;
        }
    };
    take_due_snapshots();

    while (s.t < t_end * (1.0 - 1e-15)) {
        double cap = t_end - s.t;
        if (next_probe < probes.size())
            cap = std::min(cap, probes[next_probe] - s.t);
        cap = std::max(cap, 1e-15);
        try {
            step(s, bc, cap);
        } catch (const SolverBreakdown&) {
            res.breakdown = true;
            res.detector.breakdown = true;
            if (!res.detector.detected_time) res.detector.detected_time = s.t;
            break;
        }
        res.detector.observe(s);
        take_due_snapshots();
    }
    res.end_time = s.t;
    return res;
}

}  // namespace eb
