#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace bnsp {

// Physical parameters of the two-fluid system. Both species share the
// pressure law P(rho) = rho^gamma / gamma around the background rho_bar,
// so the sound speed is c = sqrt(P'(rho_bar)) = rho_bar^{(gamma-1)/2}.
struct FluidParams {
    double mu1 = 1.0;      // shear viscosity, > 0
    double mu2 = 0.0;      // second viscosity, mu1 + (2/3) mu2 > 0
    double gamma = 2.0;    // pressure-law exponent
    double rho_bar = 1.0;  // background density
    std::optional<double> c_override;

    double mu() const { return mu1 + mu2; }

    double c() const {
        if (c_override) return *c_override;
        return std::pow(rho_bar, 0.5 * (gamma - 1.0));
    }

    double c2() const { double s = c(); return s * s; }

    void validate() const {
        if (!(mu1 > 0.0))
            throw std::invalid_argument("FluidParams: mu1 must be > 0 (got " + std::to_string(mu1) + ")");
        if (!(mu1 + (2.0 / 3.0) * mu2 > 0.0))
            throw std::invalid_argument("FluidParams: mu1 + (2/3)*mu2 must be > 0");
        if (!(rho_bar > 0.0))
            throw std::invalid_argument("FluidParams: rho_bar must be > 0");
        if (!(gamma > 0.0))
            throw std::invalid_argument("FluidParams: gamma must be > 0");
        if (c_override && !(*c_override > 0.0))
            throw std::invalid_argument("FluidParams: c override must be > 0");
    }
};

}  // namespace bnsp
