#pragma once

#include <functional>

#include "bnsp/envelopes.hpp"
#include "bnsp/fluid_params.hpp"
#include "bnsp/spectral.hpp"

namespace bnsp {

// Radial-path evaluation of L^2 norms of the linearized evolution, via
// Parseval.  Data model:
//   NS:  n_{1,0} radial with transform N(k); w_{1,0} = h(r) e, transform H(k).
//   NSP: n_{2,0} = div(g(r) e) with transform i k G(k) (zero mean, O(k) at 0);
//        w_{2,0} = h(r) e with transform H(k).
// The angular integrals reduce in closed form; only a 1D k-quadrature runs.
struct LinearDataHats {
    std::function<double(double)> scalar;  // N(k) for NS, G(k) for NSP
    std::function<double(double)> vector;  // H(k)
};

enum class LinearQuantity { Density, Momentum, GradPhi };

double linear_l2_norm(System sys, LinearQuantity q, double t,
                      const LinearDataHats& data, const FluidParams& p,
                      double kmax = 8.0);

DecaySeries linear_l2_series(System sys, LinearQuantity q,
                             const LinearDataHats& data, const FluidParams& p,
                             const std::vector<double>& times, double kmax = 8.0);

// Gaussian data hats of width sigma (in the algebraic localization class of
// any exponent, since the Gaussian is dominated by it).
LinearDataHats gaussian_data(double sigma);

// Algebraic data hats (1+r^2)^{-nu} via the closed-form transform.
LinearDataHats algebraic_data(double nu);

}  // namespace bnsp
