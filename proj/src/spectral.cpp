#include "bnsp/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace bnsp {

namespace {

EigenPair make_pair(double k, double mu, double c2, double shift) {
    EigenPair e;
    const double k2 = k * k;
    const double disc = mu * mu * k2 * k2 - 4.0 * (c2 * k2 + shift);
    e.discriminant = disc;

    const double scale = mu * k2;
    const double tol = 1e-9 * scale * scale;
    e.degenerate = std::abs(disc) <= tol;

    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        e.lambda_plus = Complex(0.5 * (-scale + s), 0.0);
        e.lambda_minus = Complex(0.5 * (-scale - s), 0.0);
    } else {
        const double s = std::sqrt(-disc);
        e.lambda_plus = Complex(-0.5 * scale, 0.5 * s);
        e.lambda_minus = Complex(-0.5 * scale, -0.5 * s);
    }
    if (!e.degenerate) {
        e.eta0 = 1.0 / (e.lambda_plus - e.lambda_minus);
        e.eta_plus = e.lambda_plus * e.eta0;
        e.eta_minus = e.lambda_minus * e.eta0;
    }
    return e;
}

}  // namespace

EigenPair ns_eigen(double k, const FluidParams& p) {
    if (k < 0.0) throw std::invalid_argument("ns_eigen: k must be >= 0");
    return make_pair(k, p.mu(), p.c2(), 0.0);
}

EigenPair nsp_eigen(double k, const FluidParams& p) {
    if (k < 0.0) throw std::invalid_argument("nsp_eigen: k must be >= 0");
    return make_pair(k, p.mu(), p.c2(), 2.0);
}

EigenPair system_eigen(System sys, double k, const FluidParams& p) {
    return sys == System::NS ? ns_eigen(k, p) : nsp_eigen(k, p);
}

GapScanResult spectral_gap_scan(System sys, double eps1, double K,
                                const FluidParams& p, int samples) {
    if (!(0.0 < eps1 && eps1 < K))
        throw std::invalid_argument("spectral_gap_scan: need 0 < eps1 < K");
    if (samples < 2) throw std::invalid_argument("spectral_gap_scan: samples < 2");

    GapScanResult r;
    r.max_real_part = -1e300;
    for (int i = 0; i < samples; ++i) {
        const double k = eps1 + (K - eps1) * static_cast<double>(i) / (samples - 1);
        const EigenPair e = system_eigen(sys, k, p);
        const double m = std::max({e.lambda_plus.real(), e.lambda_minus.real(),
                                   -p.mu1 * k * k});
        if (m > r.max_real_part) {
            r.max_real_part = m;
            r.worst_k = k;
        }
    }
    r.violated = r.max_real_part >= 0.0;
    return r;
}

double phase_correction_beta(double k, const FluidParams& p) {
    if (!(k > 0.0)) throw std::domain_error("phase_correction_beta: k must be > 0");
    const EigenPair e = ns_eigen(k, p);
    if (e.discriminant >= 0.0)
        throw std::domain_error("phase_correction_beta: k past the conjugate/real crossover");
    return e.lambda_plus.imag() / k - p.c();
}

double phase_correction_beta_series(double k, const FluidParams& p, int order) {
    // Im lambda_plus / k = c sqrt(1 - z) with z = (mu k / (2c))^2;
    // beta = c (sqrt(1-z) - 1) = c sum_{j>=1} binom(1/2, j) (-z)^j.
    if (order < 1) throw std::invalid_argument("beta series: order >= 1 required");
    const double c = p.c();
    const double z = std::pow(p.mu() * k / (2.0 * c), 2);
    double coeff = 1.0;  // binom(1/2, j) accumulator
    double zj = 1.0;
    double sum = 0.0;
    for (int j = 1; j <= order; ++j) {
        coeff *= (0.5 - (j - 1)) / j;
        zj *= -z;
        sum += coeff * zj;
    }
    return c * sum;
}

}  // namespace bnsp
