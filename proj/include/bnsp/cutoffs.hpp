#pragma once

#include <stdexcept>

#include "bnsp/fluid_params.hpp"

namespace bnsp {

// Frequency band edges.  chi1 = 1 below eps1 and 0 above 2*eps1;
// chi3 = 0 below K and 1 above K+1; chi2 = 1 - chi1 - chi3.
// Transitions are C^2 polynomial smoothsteps.
struct BandCutoffs {
    double eps1 = 0.5;
    double K = 4.0;

    static BandCutoffs defaults(const FluidParams& p) {
        // The paper only asks for eps1 small and K large; these defaults do
        // not claim to match the authors' implicit choices.
        return {p.c() / (2.0 * p.mu()), 4.0 * p.c() / p.mu()};
    }

    void validate() const {
        if (!(0.0 < eps1 && 2.0 * eps1 < K))
            throw std::invalid_argument("BandCutoffs: need 0 < eps1 and 2*eps1 < K");
    }
};

struct CutoffTriplet {
    double chi1, chi2, chi3;
};

namespace detail {
// Quintic smoothstep: 0 at x<=0, 1 at x>=1, C^2 at both ends.
inline double smoothstep(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}
}  // namespace detail

inline CutoffTriplet cutoffs(double k, const BandCutoffs& b) {
    b.validate();
    const double chi1 = 1.0 - detail::smoothstep((k - b.eps1) / b.eps1);
    const double chi3 = detail::smoothstep(k - b.K);
    return {chi1, 1.0 - chi1 - chi3, chi3};
}

}  // namespace bnsp
