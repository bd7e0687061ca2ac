#include "eulerblowup/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eb {

double unit_ball_volume(int n) {
    if (n < 1) throw std::invalid_argument("unit_ball_volume: n must be >= 1");
    // exact in the physical dimensions; tgamma would lose the last bit
    switch (n) {
        case 1: return 2.0;
        case 2: return M_PI;
        case 3: return 4.0 * M_PI / 3.0;
    }
    // omega_n = pi^(n/2) / Gamma(n/2 + 1)
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

namespace {

struct Simpson {
    const std::function<double(double)>& f;
    QuadTol tol;
    int max_depth = 52;

    static double rule(double fa, double fm, double fb, double h) {
        return h / 6.0 * (fa + 4.0 * fm + fb);
    }

    double recurse(double a, double b, double fa, double fm, double fb,
                   double whole, double eps, int depth) const {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = f(lm), frm = f(rm);
        double left = rule(fa, flm, fm, m - a);
        double right = rule(fm, frm, fb, b - m);
        double delta = left + right - whole;
        if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
            return left + right + delta / 15.0;
        return recurse(a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
    }

    double run(double a, double b) const {
        if (!(a < b)) return 0.0;
        double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
        double whole = rule(fa, fm, fb, b - a);
        double eps = std::max(tol.abs, tol.rel * std::abs(whole));
        return recurse(a, b, fa, fm, fb, whole, eps, max_depth);
    }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 QuadTol tol) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integrate: endpoints must be finite");
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, tol);
    return Simpson{f, tol}.run(a, b);
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> breakpoints, QuadTol tol) {
    if (a > b) return -integrate_split(f, b, a, breakpoints, tol);
    std::vector<double> pts{a};
    for (double p : breakpoints)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate(f, pts[i], pts[i + 1], tol);
    return total;
}

double integrate_halfline(const std::function<double(double)>& f,
                          std::span<const double> breakpoints, QuadTol tol) {
    auto g = [&f](double u) {
        if (u >= 1.0) return 0.0;
        double w = 1.0 - u;
        double r = u / w;
        return f(r) / (w * w);
    };
    std::vector<double> ubreaks;
    for (double r : breakpoints)
        if (r > 0.0 && std::isfinite(r)) ubreaks.push_back(r / (1.0 + r));
    return integrate_split(g, 0.0, 1.0, ubreaks, tol);
}

double integrate_radial(const std::function<double(double)>& f, int n,
                        double a, double b, std::span<const double> breakpoints,
                        QuadTol tol) {
    double c = n * unit_ball_volume(n);
    auto g = [&f, n](double r) { return f(r) * std::pow(r, n - 1); };
    return c * integrate_split(g, a, b, breakpoints, tol);
}

double trapezoid(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("trapezoid: size mismatch");
    double total = 0.0;
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        total += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
    return total;
}

}  // namespace eb
