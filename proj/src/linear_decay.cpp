#include "bnsp/linear_decay.hpp"

#include <cmath>
#include <numbers>

#include "bnsp/green_nsp.hpp"
#include "bnsp/quadrature.hpp"
#include "bnsp/special.hpp"

namespace bnsp {

namespace {

// Angular-integrated |field|^2 density at one k (without the k^2 dk measure).
double spectral_density(System sys, LinearQuantity q, double k, double t,
                        const LinearDataHats& data, const FluidParams& p) {
    const GreenHat g = (sys == System::NS) ? ghat_ns(k, t, p) : ghat_nsp(k, t, p);
    const Complex i(0.0, 1.0);
    const double fourpi = 4.0 * std::numbers::pi;
    const double Nk = data.scalar(k);
    const double Hk = data.vector(k);

    if (sys == System::NS) {
        if (q == LinearQuantity::Density) {
            const Complex a = g.b.s * Nk;
            const Complex b = g.b.row * Hk;
            return fourpi * (std::norm(a) + std::norm(b) / 3.0);
        }
        // momentum: w = (col N + aniso H u) xihat + iso H e
        const Complex a0 = g.b.col * Nk;
        const Complex a1 = g.b.aniso * Hk;
        const Complex be = g.b.iso * Hk;
        return fourpi * (std::norm(a0) + std::norm(be) +
                         (std::norm(a1) + 2.0 * (std::conj(a1) * be).real()) / 3.0);
    }

    // NSP: density transform i k G u
    const Complex dens_amp = i * k * g.b.s * Nk + g.b.row * Hk;  // coefficient of u
    switch (q) {
        case LinearQuantity::Density:
            return fourpi / 3.0 * std::norm(dens_amp);
        case LinearQuantity::GradPhi:
            return fourpi / 3.0 * std::norm(dens_amp) / (k * k);
        case LinearQuantity::Momentum: {
            const Complex gam = i * k * Nk * g.b.col + g.b.aniso * Hk;
            const Complex be = g.b.iso * Hk;
            return fourpi * (std::norm(be) +
                             (std::norm(gam) + 2.0 * (std::conj(gam) * be).real()) / 3.0);
        }
    }
    return 0.0;
}

}  // namespace

double linear_l2_norm(System sys, LinearQuantity q, double t,
                      const LinearDataHats& data, const FluidParams& p, double kmax) {
    // Panels resolve the cos(2 c k t)-type oscillation of |Ghat|^2.
    const double period = std::numbers::pi / (p.c() * std::max(t, 1.0));
    const double panel = std::max(period / 4.0, kmax / 40000.0);
    const double integral = integrate_panels(
        [&](double k) {
            return spectral_density(sys, q, k, t, data, p) * k * k;
        },
        1e-8, kmax, panel, 8);
    return std::sqrt(integral / std::pow(2.0 * std::numbers::pi, 3));
}

DecaySeries linear_l2_series(System sys, LinearQuantity q,
                             const LinearDataHats& data, const FluidParams& p,
                             const std::vector<double>& times, double kmax) {
    DecaySeries s;
    s.p = 2.0;
    s.tag = (sys == System::NS) ? "ns" : "nsp";
    for (double t : times) {
        s.times.push_back(t);
        s.norms.push_back(linear_l2_norm(sys, q, t, data, p, kmax));
    }
    return s;
}

LinearDataHats gaussian_data(double sigma) {
    return {[sigma](double k) { return gaussian_bump_hat(sigma, k); },
            [sigma](double k) { return gaussian_bump_hat(sigma, k); }};
}

LinearDataHats algebraic_data(double nu) {
    return {[nu](double k) { return algebraic_bump_hat(nu, k); },
            [nu](double k) { return algebraic_bump_hat(nu, k); }};
}

}  // namespace bnsp
