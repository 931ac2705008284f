#include "bnsp/envelopes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bnsp/quadrature.hpp"

namespace bnsp {

void EnvelopeSpec::validate() const {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("EnvelopeSpec: eps must be in (0,1)");
    if (!(c > 0.0)) throw std::invalid_argument("EnvelopeSpec: c must be > 0");
    if (!(D > 0.0)) throw std::invalid_argument("EnvelopeSpec: D must be > 0");
    if (alpha_order < 0) throw std::invalid_argument("EnvelopeSpec: alpha_order < 0");
}

double envelope_value(const EnvelopeSpec& spec, double r, double t) {
    if (t < 0.0) throw std::invalid_argument("envelope_value: t < 0");
    r = std::abs(r);
    const double T = 1.0 + t;
    const double a = 1.5 - spec.eps;
    const double core = 1.0 + r * r / T;
    const double front = 1.0 + (r - spec.c * t) * (r - spec.c * t) / T;
    double v = 0.0;
    switch (spec.kind) {
        case EnvelopeKind::Psi1:
            v = std::pow(T, -2.0) * (std::pow(core, -a) + std::pow(front, -a));
            break;
        case EnvelopeKind::Psi2:
            v = std::pow(T, -1.5) *
                (std::pow(core, -a) + std::pow(T, -0.5) * std::pow(front, -a));
            break;
        case EnvelopeKind::Psi3:
            v = std::pow(T, -2.0) * std::pow(core, -1.5);
            break;
        case EnvelopeKind::Psi4:
            v = std::pow(T, -1.5) * std::pow(core, -1.5);
            break;
        case EnvelopeKind::Psi5:
            v = std::pow(T, -2.0) * std::pow(core, -a);
            break;
        case EnvelopeKind::Psi6:
            v = std::pow(T, -1.5) * std::pow(core, -a);
            break;
        case EnvelopeKind::W3: {
            // Continuous form: flat inside ||x|-ct| <= sqrt(D T), shifted
            // Gaussian decay outside (both branches agree at the seam).
            const double q = std::abs(r - spec.c * t);
            const double flat = std::pow(T, -1.5) / std::sqrt(spec.D);
            if (q * q <= spec.D * T)
                v = flat;
            else
                v = flat * std::exp(-(q * q - spec.D * T) / (4.0 * T * spec.D));
            break;
        }
        case EnvelopeKind::HWave:
            v = std::pow(T, -2.0) * std::pow(front, -1.5);
            break;
        case EnvelopeKind::DWave:
            v = std::pow(T, -1.5) * std::pow(core, -1.5);
            break;
        case EnvelopeKind::GradPhi:
            v = std::pow(T, -0.5 * (3.0 - spec.eps)) *
                std::pow(core, -0.5 * (2.0 - spec.eps));
            break;
    }
    if (spec.alpha_order > 0) v *= std::pow(T, -0.5 * spec.alpha_order);
    return v;
}

RatioResult envelope_ratio(const std::vector<double>& r,
                           const std::vector<double>& values,
                           const EnvelopeSpec& spec, double t) {
    if (r.empty() || r.size() != values.size())
        throw std::invalid_argument("envelope_ratio: empty or mismatched grids");
    RatioResult out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double ratio = std::abs(values[i]) / envelope_value(spec, r[i], t);
        if (ratio > out.sup) {
            out.sup = ratio;
            out.argmax_r = r[i];
        }
    }
    return out;
}

double lp_norm_radial(const std::vector<double>& r, const std::vector<double>& values,
                      double p) {
    if (!(p > 1.0)) throw std::invalid_argument("lp_norm: p must be > 1");
    if (r.size() != values.size() || r.size() < 2)
        throw std::invalid_argument("lp_norm: bad grid");
    if (p > 1e9) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        const double h = r[i + 1] - r[i];
        const double f0 = std::pow(std::abs(values[i]), p) * r[i] * r[i];
        const double f1 = std::pow(std::abs(values[i + 1]), p) * r[i + 1] * r[i + 1];
        acc += 0.5 * h * (f0 + f1);
    }
    return std::pow(4.0 * std::numbers::pi * acc, 1.0 / p);
}

double lp_norm_radial_fn(const std::function<double(double)>& f, double p,
                         double r_max, int panels) {
    if (!(p > 1.0)) throw std::invalid_argument("lp_norm: p must be > 1");
    const double acc = integrate_panels(
        [&](double r) { return std::pow(std::abs(f(r)), p) * r * r; }, 0.0, r_max,
        r_max / panels, 8);
    return std::pow(4.0 * std::numbers::pi * acc, 1.0 / p);
}

FitResult fit_decay_exponent(const DecaySeries& s, double t_lo, double t_hi) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        if (s.times[i] < t_lo || s.times[i] > t_hi) continue;
        if (!(s.norms[i] > 0.0)) throw std::invalid_argument("fit: nonpositive norm");
        x.push_back(std::log(1.0 + s.times[i]));
        y.push_back(std::log(s.norms[i]));
    }
    const std::size_t n = x.size();
    if (n < 5) throw std::invalid_argument("fit_decay_exponent: < 5 points in window");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_decay_exponent: degenerate window");
    FitResult r;
    r.slope = sxy / sxx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - my - r.slope * (x[i] - mx);
        rss += e * e;
    }
    r.stderr_ = (n > 2) ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
    return r;
}

namespace {

double hd_sweep(double a1, double c, double t_max, int nt, int nx, double* jump) {
    double sup = 0.0;
    double worst_jump = 0.0;
    for (int i = 0; i < nt; ++i) {
        const double t = t_max * (i + 1) / nt;
        const double T = 1.0 + t;
        double prev_ratio = -1.0;
        for (int j = 0; j <= nx; ++j) {
            const double x = 4.0 * c * t * j / nx;
            const double lhs = std::pow(1.0 + (x - c * t) * (x - c * t) / T, -a1);
            const double rhs_shape =
                std::pow(T, 2.0 * a1) * std::pow(1.0 + x * x / T, -a1);
            const double ratio = lhs / rhs_shape;
            sup = std::max(sup, ratio);
            if (jump && prev_ratio > 0.0 && std::abs(x - 2.0 * c * t) < 4.0 * c * t / nx)
                worst_jump = std::max(worst_jump,
                                      std::abs(ratio - prev_ratio) /
                                          std::max(ratio, prev_ratio));
            prev_ratio = ratio;
        }
    }
    if (jump) *jump = worst_jump;
    return sup;
}

}  // namespace

HdExchangeReport hd_exchange_check(double a1, double c, double t_max, int nt, int nx) {
    if (!(a1 > 0.0)) throw std::invalid_argument("hd_exchange_check: a1 <= 0");
    HdExchangeReport rep;
    double jump = 0.0;
    rep.empirical_C = hd_sweep(a1, c, t_max, nt, nx, &jump);
    const double refined = hd_sweep(a1, c, t_max, 2 * nt, 2 * nx, nullptr);
    rep.refinement_delta =
        std::abs(refined - rep.empirical_C) / std::max(refined, rep.empirical_C);
    rep.empirical_C = std::max(rep.empirical_C, refined);
    rep.boundary_jump = jump;
    return rep;
}

}  // namespace bnsp
