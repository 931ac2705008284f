#include "bnsp/green_ns.hpp"

#include <cmath>
#include <stdexcept>

namespace bnsp {

namespace detail {

Propagator propagate(const EigenPair& e, double t) {
    Propagator pr;
    if (e.degenerate) {
        const Complex l = 0.5 * (e.lambda_plus + e.lambda_minus);
        const Complex el = std::exp(l * t);
        pr.exp_p = el;
        pr.exp_m = el;
        pr.phi = t * el;
        pr.g11 = el * (1.0 - l * t);
        pr.g22 = el * (1.0 + l * t);
        return pr;
    }
    pr.exp_p = std::exp(e.lambda_plus * t);
    pr.exp_m = std::exp(e.lambda_minus * t);
    if (e.discriminant < 0.0) {
        // conjugate pair: phi = e^{sigma t} sin(omega t)/omega, real
        const double sigma = e.lambda_plus.real();
        const double omega = e.lambda_plus.imag();
        pr.phi = std::exp(sigma * t) * (std::sin(omega * t) / omega);
    } else {
        // real roots: e^{l- t} expm1((l+ - l-) t)/(l+ - l-)
        const double d = e.lambda_plus.real() - e.lambda_minus.real();
        pr.phi = pr.exp_m.real() * (std::expm1(d * t) / d);
    }
    pr.g11 = pr.exp_p - e.lambda_plus * pr.phi;
    pr.g22 = pr.exp_p + e.lambda_minus * pr.phi;
    return pr;
}

BlockSymbol l1_matrix(const EigenPair& e, double k, double coupling) {
    const Complex i(0.0, 1.0);
    BlockSymbol m;
    m.s = -e.eta_minus;
    m.row = -i * e.eta0 * k;
    m.col = -i * e.eta0 * coupling;
    m.iso = 0.0;
    m.aniso = e.eta_plus;
    return m;
}

BlockSymbol l2_matrix(const EigenPair& e, double k, double coupling) {
    const Complex i(0.0, 1.0);
    BlockSymbol m;
    m.s = e.eta_plus;
    m.row = i * e.eta0 * k;
    m.col = i * e.eta0 * coupling;
    m.iso = 0.0;
    m.aniso = -e.eta_minus;
    return m;
}

BlockSymbol l3_matrix() {
    BlockSymbol m;
    m.iso = 1.0;
    m.aniso = -1.0;
    return m;
}

namespace {

GreenHat assemble(const EigenPair& e, double k, double t, double coupling,
                  const FluidParams& p) {
    GreenHat g;
    g.k = k;
    g.t = t;
    g.degenerate = e.degenerate;

    const Propagator pr = propagate(e, t);
    const Complex i(0.0, 1.0);
    const double heat = std::exp(-p.mu1 * k * k * t);

    g.b.s = pr.g11;
    g.b.row = -i * k * pr.phi;
    g.b.col = -i * coupling * pr.phi;
    g.b.iso = heat;
    g.b.aniso = pr.g22 - heat;
    return g;
}

}  // namespace

}  // namespace detail

BlockSymbol ns_generator(double k, const FluidParams& p) {
    const Complex i(0.0, 1.0);
    BlockSymbol a;
    a.s = 0.0;
    a.row = i * k;
    a.col = i * p.c2() * k;
    a.iso = p.mu1 * k * k;
    a.aniso = p.mu2 * k * k;
    return a;
}

GreenHat ghat_ns(double k, double t, const FluidParams& p) {
    if (k < 0.0 || t < 0.0) throw std::invalid_argument("ghat_ns: need k >= 0, t >= 0");
    if (k == 0.0) {
        GreenHat g;
        g.k = 0.0;
        g.t = t;
        g.degenerate = true;
        g.b = BlockSymbol::identity();
        return g;
    }
    const EigenPair e = ns_eigen(k, p);
    return detail::assemble(e, k, t, p.c2() * k, p);
}

WaveComponents longwave_decompose(double k, double t, const FluidParams& p,
                                  const BandCutoffs& bands) {
    if (!(k > 0.0) || k >= 2.0 * bands.eps1)
        throw std::domain_error("longwave_decompose: k outside supp chi1");
    const EigenPair e = ns_eigen(k, p);
    if (e.degenerate || e.discriminant >= 0.0)
        throw std::domain_error("longwave_decompose: eigenvalues not a conjugate pair in band");

    const double chi1 = cutoffs(k, bands).chi1;
    const double c = p.c();
    const double sigma = e.lambda_plus.real();
    const double omega = e.lambda_plus.imag();
    const double theta = (omega - c * k) * t;  // |xi| beta(|xi|^2) t, exact
    const double es = std::exp(sigma * t);
    const double heat = std::exp(-p.mu1 * k * k * t);
    const double cos_ck = std::cos(c * k * t), sin_ck = std::sin(c * k * t);
    const double cos_th = std::cos(theta), sin_th = std::sin(theta);
    const Complex i(0.0, 1.0);

    const BlockSymbol L1 = detail::l1_matrix(e, k, p.c2() * k);
    const BlockSymbol L2 = detail::l2_matrix(e, k, p.c2() * k);
    BlockSymbol La;
    La.aniso = 1.0;
    BlockSymbol Lb;
    Lb.aniso = k;  // xi xi^T / |xi|
    BlockSymbol Lc;
    Lc.iso = 1.0;

    const BlockSymbol A = L1 + L2 - La;
    const BlockSymbol B = L1 - L2 - Lb;

    WaveComponents w;
    w.k = k;
    w.t = t;
    w.E = chi1 * heat * Lc;
    w.R1 = (chi1 * heat * (cos_ck - 1.0)) * La;
    w.R2 = (chi1 * (es - heat) * cos_ck) * La;
    w.H = chi1 * es *
          (cos_ck * (cos_th * A + i * sin_th * B) +
           sin_ck * (-sin_th * A + i * cos_th * B));
    w.RE = chi1 * es *
           (cos_ck * ((cos_th - 1.0) * La + i * sin_th * Lb) +
            sin_ck * (-sin_th * La + i * cos_th * Lb));
    return w;
}

ShortwaveSplit shortwave_regular(double k, double t, const FluidParams& p,
                                 const BandCutoffs& bands) {
    if (!(k > bands.K)) throw std::domain_error("shortwave_regular: k must be > K");
    const EigenPair e = ns_eigen(k, p);
    const double chi3 = cutoffs(k, bands).chi3;
    const detail::Propagator pr = detail::propagate(e, t);
    const double heat = std::exp(-p.mu1 * k * k * t);

    ShortwaveSplit s;
    s.singular = (chi3 * pr.exp_p) * detail::l1_matrix(e, k, p.c2() * k);
    s.regular = (chi3 * pr.exp_m) * detail::l2_matrix(e, k, p.c2() * k) +
                (chi3 * heat) * detail::l3_matrix();
    s.lambda_plus_amplitude = std::abs(pr.exp_p);
    return s;
}

}  // namespace bnsp
