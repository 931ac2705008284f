#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bnsp {

// Decay-profile family: the ansatz weights psi1..psi6, the wave-dissipation
// profile W3, the closed-form Huygens/diffusion waves of the n = 3 theory,
// and the electric-field envelope.
enum class EnvelopeKind {
    Psi1, Psi2, Psi3, Psi4, Psi5, Psi6, W3, HWave, DWave, GradPhi
};

struct EnvelopeSpec {
    EnvelopeKind kind = EnvelopeKind::Psi3;
    double eps = 0.05;   // slack in (0, 1)
    double c = 1.0;      // front speed
    double D = 1.0;      // diffusion constant (W3 only)
    int alpha_order = 0; // derivative count: multiplies by (1+t)^{-alpha/2}

    void validate() const;
};

// Envelope value at radius r >= 0 and time t >= 0.  Strictly positive.
double envelope_value(const EnvelopeSpec& spec, double r, double t);

struct RatioResult {
    double sup = 0.0;
    double argmax_r = 0.0;
};

// sup over samples of |value| / envelope, with its location.
RatioResult envelope_ratio(const std::vector<double>& r,
                           const std::vector<double>& values,
                           const EnvelopeSpec& spec, double t);

// L^p norm of a radial profile sampled on a uniform grid (weight 4 pi r^2);
// p = inf (use p > 1e9) gives the max.  Rejects p <= 1.
double lp_norm_radial(const std::vector<double>& r, const std::vector<double>& values,
                      double p);

// L^p norm of a closed-form radial profile by quadrature.
double lp_norm_radial_fn(const std::function<double(double)>& f, double p,
                         double r_max, int panels = 4000);

struct DecaySeries {
    std::vector<double> times;
    std::vector<double> norms;
    double p = 2.0;
    std::string tag;
};

struct FitResult {
    double slope = 0.0;
    double stderr_ = 0.0;
};

// Least-squares slope of log(norm) against log(1+t) over the window.
FitResult fit_decay_exponent(const DecaySeries& s, double t_lo, double t_hi);

// Empirical constant of the H->D exchange inequality
//   (1 + (|x|-ct)^2/(1+t))^{-a1} <= C (1+t)^{2 a1} (1 + |x|^2/(1+t))^{-a1}.
struct HdExchangeReport {
    double empirical_C = 0.0;
    double refinement_delta = 0.0;  // relative change when the sweep doubles
    double boundary_jump = 0.0;     // ratio discontinuity proxy at |x| = 2ct
};

HdExchangeReport hd_exchange_check(double a1, double c, double t_max = 100.0,
                                   int nt = 40, int nx = 200);

}  // namespace bnsp
