#include "bnsp/kirchhoff.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace bnsp {

double spherical_mean_radial(const std::function<double(double)>& g, double rho,
                             double R, int gl_order, int panels) {
    if (R < 0.0) throw std::invalid_argument("spherical_mean_radial: R < 0");
    if (R == 0.0) return g(rho);
    if (rho < 1e-12) return g(R);
    const double lo = std::abs(rho - R), hi = rho + R;
    const double val = integrate_panels([&](double s) { return s * g(s); }, lo, hi,
                                        (hi - lo) / panels, gl_order);
    return val / (2.0 * rho * R);
}

double kirchhoff_w_radial(const std::function<double(double)>& g, double rho,
                          double t, double c) {
    if (t < 0.0) throw std::invalid_argument("kirchhoff_w_radial: t < 0");
    return t * spherical_mean_radial(g, rho, c * t);
}

double kirchhoff_wt_radial(const std::function<double(double)>& g, double rho,
                           double t, double c) {
    if (t < 0.0) throw std::invalid_argument("kirchhoff_wt_radial: t < 0");
    const double R = c * t;
    if (R == 0.0) return g(rho);
    const double m = spherical_mean_radial(g, rho, R);
    // d/dR of (1/(2 rho R)) int_{|rho-R|}^{rho+R} s g(s) ds
    if (rho < 1e-12) {
        const double h = 1e-5 * (1.0 + R);
        const double d = (g(R + h) - g(R - h)) / (2.0 * h);
        return m + R * d;
    }
    const double lo = std::abs(rho - R), hi = rho + R;
    const double boundary =
        hi * g(hi) - ((R >= rho) ? 1.0 : -1.0) * lo * g(lo);
    const double dm = -m / R + boundary / (2.0 * rho * R);
    return m + R * dm;
}

namespace {

std::vector<double> apply_multiplier(
    Fft3& fft, const std::vector<double>& g,
    const std::function<std::complex<double>(double, double, double)>& mult) {
    std::vector<std::complex<double>> spec;
    fft.forward(g, spec);
    fft.for_each_mode([&](std::size_t idx, double kx, double ky, double kz) {
        spec[idx] *= mult(kx, ky, kz);
    });
    std::vector<double> out;
    fft.inverse(spec, out);
    return out;
}

}  // namespace

std::vector<double> kirchhoff_grid(Fft3& fft, const std::vector<double>& g, double t,
                                   double c, KirchhoffMode mode,
                                   const SphereRule& rule) {
    const double ct = c * t;
    return apply_multiplier(fft, g, [&](double kx, double ky, double kz) {
        std::complex<double> m = 0.0;
        for (std::size_t j = 0; j < rule.points.size(); ++j) {
            const double phase =
                ct * (kx * rule.points[j][0] + ky * rule.points[j][1] +
                      kz * rule.points[j][2]);
            const std::complex<double> e(std::cos(phase), std::sin(phase));
            if (mode == KirchhoffMode::W)
                m += rule.weights[j] * t * e;
            else
                m += rule.weights[j] * (e + std::complex<double>(0.0, phase) * e);
        }
        return m;
    });
}

std::vector<double> wave_multiplier_grid(Fft3& fft, const std::vector<double>& g,
                                         double t, double c, KirchhoffMode mode) {
    return apply_multiplier(fft, g, [&](double kx, double ky, double kz) {
        const double k = std::sqrt(kx * kx + ky * ky + kz * kz);
        const double z = c * k * t;
        if (mode == KirchhoffMode::W) {
            if (z < 1e-12) return std::complex<double>(t, 0.0);
            return std::complex<double>(std::sin(z) / (c * k), 0.0);
        }
        return std::complex<double>(std::cos(z), 0.0);
    });
}

double cone_coupling_integral(double x, double t, double C, double c, int panels) {
    if (!(t > 0.0)) throw std::invalid_argument("cone_coupling_integral: t <= 0");
    const double Ct = C * t;
    auto sinhc = [](double z) {
        if (std::abs(z) < 1e-6) return 1.0 + z * z / 6.0;
        return std::sinh(z) / z;
    };
    auto shell = [&](double s) {
        const double arg = (x * x + c * c * s * s) / Ct;
        const double z = 2.0 * c * s * x / Ct;
        // exp(-arg) sinhc(z) evaluated stably as exp(z - arg) (1-e^{-2z})/(2z)
        double surface;
        if (z > 30.0)
            surface = std::exp(z - arg) / (2.0 * z);
        else
            surface = std::exp(-arg) * sinhc(z);
        return 4.0 * std::numbers::pi * s * surface;
    };
    const double val = integrate_panels(shell, 0.0, t, t / panels, 10);
    return val / std::pow(t, 2.5);
}

}  // namespace bnsp
