#pragma once

#include "bnsp/green_ns.hpp"

namespace bnsp {

// Generator of the linearized NSP system on (n2, w2) with the Poisson
// coupling folded in: the (2,1) block carries i xi (c^2 + 2/k^2),
// evaluated as i xihat (c^2 k + 2/k) to avoid cancellation at small k.
BlockSymbol nsp_generator(double k, const FluidParams& p);

// Exact symbol of the NSP Green's function.  k = 0 is rejected: the
// nonlocal col/tensor blocks are undefined there; the scalar block's
// k -> 0 limit is the plasma mode nsp_plasma_g11.
GreenHat ghat_nsp(double k, double t, const FluidParams& p);

// k -> 0 limit of the (1,1) entry: cos(sqrt(2) t).
double nsp_plasma_g11(double t);

// chi1-weighted split of the NSP symbol into the lambda_plus, lambda_minus
// and rotational parts, with exact spectral weights.  Sum reproduces
// chi1 * Ghat.
struct LowFreqForms {
    BlockSymbol plus, minus, zero;
    double k = 0.0, t = 0.0;
};

LowFreqForms lowfreq_forms(double k, double t, const FluidParams& p,
                           const BandCutoffs& bands);

ShortwaveSplit shortwave_regular_nsp(double k, double t, const FluidParams& p,
                                     const BandCutoffs& bands);

// Coupling amplitude (c^2 k + 2/k) of the NSP column block.
inline double nsp_coupling(double k, const FluidParams& p) {
    return p.c2() * k + 2.0 / k;
}

}  // namespace bnsp
