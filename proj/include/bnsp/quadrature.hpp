#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace bnsp {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

// Gauss-Legendre rule of order n (cached; Newton on Legendre polynomials).
const GaussRule& gauss_legendre(int n);

// Composite Gauss-Legendre over [a, b] with panels of width <= panel_width.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double panel_width, int gl_order = 8);

// Integrate over explicit breakpoints, gl_order nodes per sub-interval.
double integrate_breakpoints(const std::function<double(double)>& f,
                             const std::vector<double>& breaks, int gl_order = 12);

// Semi-infinite tail by geometric panel extension: integrates from a
// until a panel contributes less than rel_tol of the accumulated total.
double integrate_tail(const std::function<double(double)>& f, double a,
                      double first_width, double growth, double rel_tol,
                      int gl_order = 12, int max_panels = 200);

// Surface quadrature on the unit sphere; weights sum to 1 so that
// sum w_i f(y_i) approximates the spherical average.
struct SphereRule {
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;
};

// 26-point Lebedev rule (octahedron vertices, edge midpoints, cube corners),
// exact for spherical polynomials of degree <= 7.
const SphereRule& lebedev26();

// Gauss-Legendre x uniform-azimuth product rule with n_polar polar nodes and
// 2*n_polar azimuthal nodes; exact for degree <= 2*n_polar - 1.
SphereRule product_sphere_rule(int n_polar);

}  // namespace bnsp
