#pragma once
#include <functional>
#include <span>
#include <vector>

namespace eb {

// Volume of the n-dimensional unit ball (omega_1 = 2, omega_2 = pi, ...).
double unit_ball_volume(int n);

struct QuadTol {
    double abs = 1e-12;
    double rel = 1e-10;
};

// Adaptive composite Simpson on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 QuadTol tol = {});

// Same, but the interval is first split at every interior breakpoint so the
// integrand only needs to be smooth between them.
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> breakpoints, QuadTol tol = {});

// int_0^inf f(r) dr via the substitution r = u/(1-u); f must decay at least
// like r^-2. Breakpoints are given in r coordinates.
double integrate_halfline(const std::function<double(double)>& f,
                          std::span<const double> breakpoints, QuadTol tol = {});

// Radial integral over the ball B_b \ B_a in n dimensions:
//   int f(|x|) dx = n * omega_n * int_a^b f(r) r^(n-1) dr.
double integrate_radial(const std::function<double(double)>& f, int n,
                        double a, double b, std::span<const double> breakpoints,
                        QuadTol tol = {});

// Trapezoid rule over tabulated values (xs strictly increasing).
double trapezoid(std::span<const double> xs, std::span<const double> ys);

}  // namespace eb
