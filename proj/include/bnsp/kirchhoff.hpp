#pragma once

#include <functional>
#include <vector>

#include "bnsp/fft_grid.hpp"
#include "bnsp/quadrature.hpp"

namespace bnsp {

// Spherical mean of a radial function: (1/4pi) int_{|y|=1} g(|x + R y|) dS_y
// = (1/(2 rho R)) int_{|rho-R|}^{rho+R} s g(s) ds  for rho > 0, g(R) at rho = 0.
double spherical_mean_radial(const std::function<double(double)>& g, double rho,
                             double R, int gl_order = 24, int panels = 64);

// Kirchhoff operators on radial functions:
//   (w * g)(x)   = t * mean(|x|, ct)
//   (w_t * g)(x) = mean(|x|, ct) + ct * d/dR mean(|x|, R)|_{R=ct}
double kirchhoff_w_radial(const std::function<double(double)>& g, double rho,
                          double t, double c);
double kirchhoff_wt_radial(const std::function<double(double)>& g, double rho,
                           double t, double c);

// Grid Kirchhoff through exact Fourier shifts: the quadrature sum
// sum_j w_j g(x + ct y_j) becomes a single multiplier
// sum_j w_j e^{i ct xi . y_j}, so the sphere rule is the only error source.
enum class KirchhoffMode { W, Wt };

std::vector<double> kirchhoff_grid(Fft3& fft, const std::vector<double>& g, double t,
                                   double c, KirchhoffMode mode,
                                   const SphereRule& rule);

// Exact multiplier version (sin(c k t)/(c k) or cos(c k t)) for comparison.
std::vector<double> wave_multiplier_grid(Fft3& fft, const std::vector<double>& g,
                                         double t, double c, KirchhoffMode mode);

// Cone-coupling integral of the shear/acoustic interaction:
//   int_0^t s int_{|y|=1} e^{-|x + c s y|^2/(C t)} / t^{5/2} dS_y ds,
// with the angular integral in closed form.
double cone_coupling_integral(double x, double t, double C, double c,
                              int panels = 256);

}  // namespace bnsp
