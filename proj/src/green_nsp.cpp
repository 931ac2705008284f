#include "bnsp/green_nsp.hpp"

#include <cmath>
#include <stdexcept>

namespace bnsp {

BlockSymbol nsp_generator(double k, const FluidParams& p) {
    if (!(k > 0.0)) throw std::domain_error("nsp_generator: k must be > 0");
    const Complex i(0.0, 1.0);
    BlockSymbol a;
    a.s = 0.0;
    a.row = i * k;
    a.col = i * nsp_coupling(k, p);
    a.iso = p.mu1 * k * k;
    a.aniso = p.mu2 * k * k;
    return a;
}

GreenHat ghat_nsp(double k, double t, const FluidParams& p) {
    if (!(k > 0.0))
        throw std::domain_error(
            "ghat_nsp: k = 0 rejected (nonlocal blocks undefined; use nsp_plasma_g11 "
            "for the scalar block limit)");
    if (t < 0.0) throw std::invalid_argument("ghat_nsp: t must be >= 0");
    const EigenPair e = nsp_eigen(k, p);
    const detail::Propagator pr = detail::propagate(e, t);
    const Complex i(0.0, 1.0);
    const double heat = std::exp(-p.mu1 * k * k * t);

    GreenHat g;
    g.k = k;
    g.t = t;
    g.degenerate = e.degenerate;
    g.nonlocal = true;
    g.b.s = pr.g11;
    g.b.row = -i * k * pr.phi;
    g.b.col = -i * nsp_coupling(k, p) * pr.phi;
    g.b.iso = heat;
    g.b.aniso = pr.g22 - heat;
    return g;
}

double nsp_plasma_g11(double t) { return std::cos(std::sqrt(2.0) * t); }

LowFreqForms lowfreq_forms(double k, double t, const FluidParams& p,
                           const BandCutoffs& bands) {
    if (!(k > 0.0) || k >= 2.0 * bands.eps1)
        throw std::domain_error("lowfreq_forms: k outside supp chi1");
    const EigenPair e = nsp_eigen(k, p);
    const double chi1 = cutoffs(k, bands).chi1;
    const detail::Propagator pr = detail::propagate(e, t);
    const double heat = std::exp(-p.mu1 * k * k * t);
    const double coupling = nsp_coupling(k, p);

    LowFreqForms f;
    f.k = k;
    f.t = t;
    f.plus = (chi1 * pr.exp_p) * detail::l1_matrix(e, k, coupling);
    f.minus = (chi1 * pr.exp_m) * detail::l2_matrix(e, k, coupling);
    f.zero = (chi1 * heat) * detail::l3_matrix();
    return f;
}

ShortwaveSplit shortwave_regular_nsp(double k, double t, const FluidParams& p,
                                     const BandCutoffs& bands) {
    if (!(k > bands.K)) throw std::domain_error("shortwave_regular_nsp: k must be > K");
    const EigenPair e = nsp_eigen(k, p);
    const double chi3 = cutoffs(k, bands).chi3;
    const detail::Propagator pr = detail::propagate(e, t);
    const double heat = std::exp(-p.mu1 * k * k * t);
    const double coupling = nsp_coupling(k, p);

    ShortwaveSplit s;
    s.singular = (chi3 * pr.exp_p) * detail::l1_matrix(e, k, coupling);
    s.regular = (chi3 * pr.exp_m) * detail::l2_matrix(e, k, coupling) +
                (chi3 * heat) * detail::l3_matrix();
    s.lambda_plus_amplitude = std::abs(pr.exp_p);
    return s;
}

}  // namespace bnsp
