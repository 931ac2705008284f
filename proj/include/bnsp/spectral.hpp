#pragma once

#include <complex>

#include "bnsp/fluid_params.hpp"

namespace bnsp {

using Complex = std::complex<double>;

enum class System { NS, NSP };

// Roots and spectral weights of the longitudinal 2x2 mode system at
// wavenumber k.  For NS the characteristic polynomial is
//   tau^2 + mu k^2 tau + c^2 k^2 = 0,
// for NSP
//   tau^2 + mu k^2 tau + (c^2 k^2 + 2) = 0.
// lambda_plus is the root of larger real part; below the conjugate/real
// crossover it is the branch with positive imaginary part, above it the
// slowly decaying real root (-> -c^2/mu as k -> infinity).
struct EigenPair {
    Complex lambda_plus{};
    Complex lambda_minus{};
    Complex eta0{};        // 1/(lambda_plus - lambda_minus)
    Complex eta_plus{};    // lambda_plus * eta0
    Complex eta_minus{};   // lambda_minus * eta0
    double discriminant = 0.0;  // mu^2 k^4 - 4 (c^2 k^2 [+ 2])
    bool degenerate = false;    // |disc| below tolerance: eta weights invalid
};

EigenPair ns_eigen(double k, const FluidParams& p);
EigenPair nsp_eigen(double k, const FluidParams& p);
EigenPair system_eigen(System sys, double k, const FluidParams& p);

struct GapScanResult {
    double max_real_part = 0.0;  // max over band of max(Re l+, Re l-, -mu1 k^2)
    double worst_k = 0.0;
    bool violated = false;       // max_real_part >= 0
};

// Scans [eps1, K] with `samples` uniformly spaced wavenumbers.
GapScanResult spectral_gap_scan(System sys, double eps1, double K,
                                const FluidParams& p, int samples);

// beta(k^2) = Im lambda_plus(k)/k - c, from the exact NS eigenvalue.
// Throws std::domain_error past the conjugate/real crossover.
double phase_correction_beta(double k, const FluidParams& p);

// Truncated even-power series of beta; `order` = number of retained terms
// (order 1 keeps the k^2 term).  Used only for consistency tests against
// the exact value.
double phase_correction_beta_series(double k, const FluidParams& p, int order);

}  // namespace bnsp
