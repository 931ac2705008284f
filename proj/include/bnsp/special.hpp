#pragma once

#include <cmath>

namespace bnsp {

// Spherical Bessel functions with series fallbacks near z = 0.
inline double sph_j0(double z) {
    const double az = std::abs(z);
    if (az < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
    }
    return std::sin(z) / z;
}

inline double sph_j1(double z) {
    const double az = std::abs(z);
    if (az < 1e-3) {
        const double z2 = z * z;
        return z / 3.0 * (1.0 - z2 / 10.0 * (1.0 - z2 / 28.0));
    }
    return std::sin(z) / (z * z) - std::cos(z) / z;
}

// j1(z)/z, finite at 0 (-> 1/3).
inline double sph_j1_over_z(double z) {
    const double az = std::abs(z);
    if (az < 1e-3) {
        const double z2 = z * z;
        return (1.0 - z2 / 10.0 * (1.0 - z2 / 28.0)) / 3.0;
    }
    return sph_j1(z) / z;
}

inline double sph_j2(double z) {
    const double az = std::abs(z);
    if (az < 1e-2) {
        const double z2 = z * z;
        return z2 / 15.0 * (1.0 - z2 / 14.0 * (1.0 - z2 / 36.0));
    }
    return (3.0 / (z * z) - 1.0) * std::sin(z) / z - 3.0 * std::cos(z) / (z * z);
}

// 3D Fourier transform of the radial bump (1 + |x|^2)^{-nu}, nu > 3/2:
//   F_nu(k) = 2^{5/2-nu} pi^{3/2} / Gamma(nu) * k^{nu-3/2} K_{nu-3/2}(k),
// with F_nu(0) = pi^{3/2} Gamma(nu - 3/2)/Gamma(nu).
double algebraic_bump_hat(double nu, double k);

// 3D Fourier transform of exp(-|x|^2/(2 sigma^2)).
inline double gaussian_bump_hat(double sigma, double k) {
    const double s2 = sigma * sigma;
    return std::pow(2.0 * 3.14159265358979323846 * s2, 1.5) *
           std::exp(-0.5 * k * k * s2);
}

}  // namespace bnsp
