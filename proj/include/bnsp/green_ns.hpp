#pragma once

#include "bnsp/block_symbol.hpp"
#include "bnsp/cutoffs.hpp"
#include "bnsp/fluid_params.hpp"
#include "bnsp/spectral.hpp"

namespace bnsp {

// Fourier symbol of a Green's function at one (k, t), in block form.
// For NSP the col/tensor blocks carry the nonlocal 1/k^2 enhancement.
struct GreenHat {
    BlockSymbol b;
    double k = 0.0;
    double t = 0.0;
    bool degenerate = false;
    bool nonlocal = false;
};

// Generator A(xi) of the linearized NS system on (n1, w1):
//   d/dt Ghat + A Ghat = 0,  A = [[0, i xi^T], [i c^2 xi, mu1 k^2 I + mu2 xi xi^T]].
BlockSymbol ns_generator(double k, const FluidParams& p);

// Exact symbol of the NS Green's function.  Blocks are derived from the
// ODE system (the semigroup residual test is the authority on the c^2
// placement): row amplitude -i k phi, col amplitude -i c^2 k phi with
// phi = (e^{l+ t} - e^{l- t})/(l+ - l-).  Degenerate wavenumbers use the
// analytic double-root limits.
GreenHat ghat_ns(double k, double t, const FluidParams& p);

// Long-wave pairing of chi1 * Ghat into rotational (E), Huygens (H),
// Riesz-I/II (R1, R2) and remainder (RE) blocks.  Each block is computed
// from its own explicit formula; their sum reproduces chi1 * Ghat exactly.
struct WaveComponents {
    BlockSymbol E, H, R1, R2, RE;
    double k = 0.0, t = 0.0;
};

WaveComponents longwave_decompose(double k, double t, const FluidParams& p,
                                  const BandCutoffs& bands);

// Short-wave split: the lambda_plus branch (whose inverse transform is the
// Dirac-like part) goes to `singular`; `regular` holds the synthesizable
// lambda_minus + rotational part.  regular + singular = chi3 * Ghat.
struct ShortwaveSplit {
    BlockSymbol regular;
    BlockSymbol singular;
    double lambda_plus_amplitude = 0.0;  // |e^{lambda_plus t}|
};

ShortwaveSplit shortwave_regular(double k, double t, const FluidParams& p,
                                 const BandCutoffs& bands);

namespace detail {

// Shared propagator pieces for a 2x2 longitudinal system with eigen pair e.
struct Propagator {
    Complex exp_p, exp_m;  // e^{l+ t}, e^{l- t}
    Complex phi;           // (e^{l+ t} - e^{l- t})/(l+ - l-)
    Complex g11;           // (l+ e^{l- t} - l- e^{l+ t})/(l+ - l-)
    Complex g22;           // (l+ e^{l+ t} - l- e^{l- t})/(l+ - l-)
};

Propagator propagate(const EigenPair& e, double t);

BlockSymbol l1_matrix(const EigenPair& e, double k, double coupling);
BlockSymbol l2_matrix(const EigenPair& e, double k, double coupling);
BlockSymbol l3_matrix();

}  // namespace detail

}  // namespace bnsp
