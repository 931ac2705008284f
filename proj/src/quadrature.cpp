#include "bnsp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bnsp {

namespace {

GaussRule compute_gauss(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss(n)).first;
    return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double panel_width, int gl_order) {
    if (b <= a) return 0.0;
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));
    const double h = (b - a) / n;
    const GaussRule& g = gauss_legendre(gl_order);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lo = a + i * h;
        const double mid = lo + 0.5 * h;
        double s = 0.0;
        for (std::size_t j = 0; j < g.x.size(); ++j) s += g.w[j] * f(mid + 0.5 * h * g.x[j]);
        total += 0.5 * h * s;
    }
    return total;
}

double integrate_breakpoints(const std::function<double(double)>& f,
                             const std::vector<double>& breaks, int gl_order) {
    const GaussRule& g = gauss_legendre(gl_order);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double lo = breaks[i], hi = breaks[i + 1];
        if (hi <= lo) continue;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double s = 0.0;
        for (std::size_t j = 0; j < g.x.size(); ++j) s += g.w[j] * f(mid + half * g.x[j]);
        total += half * s;
    }
    return total;
}

double integrate_tail(const std::function<double(double)>& f, double a,
                      double first_width, double growth, double rel_tol,
                      int gl_order, int max_panels) {
    const GaussRule& g = gauss_legendre(gl_order);
    double total = 0.0;
    double lo = a, w = first_width;
    for (int i = 0; i < max_panels; ++i) {
        const double hi = lo + w;
        const double mid = 0.5 * (lo + hi), half = 0.5 * w;
        double s = 0.0;
        for (std::size_t j = 0; j < g.x.size(); ++j) s += g.w[j] * f(mid + half * g.x[j]);
        const double panel = half * s;
        total += panel;
        if (i > 2 && std::abs(panel) < rel_tol * std::abs(total)) break;
        lo = hi;
        w *= growth;
    }
    return total;
}

const SphereRule& lebedev26() {
    static const SphereRule rule = [] {
        SphereRule r;
        const double a1 = 1.0 / 21.0;        // 6 octahedron vertices
        const double a2 = 4.0 / 105.0;       // 12 edge midpoints
        const double a3 = 27.0 / 840.0;      // 8 cube corners
        for (int d = 0; d < 3; ++d)
            for (int s : {-1, 1}) {
                std::array<double, 3> p{0.0, 0.0, 0.0};
                p[d] = s;
                r.points.push_back(p);
                r.weights.push_back(a1);
            }
        const double q = 1.0 / std::sqrt(2.0);
        for (int d = 0; d < 3; ++d)
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    std::array<double, 3> p{0.0, 0.0, 0.0};
                    p[d] = 0.0;
                    p[(d + 1) % 3] = s1 * q;
                    p[(d + 2) % 3] = s2 * q;
                    r.points.push_back(p);
                    r.weights.push_back(a2);
                }
        const double u = 1.0 / std::sqrt(3.0);
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1})
                for (int s3 : {-1, 1}) {
                    r.points.push_back({s1 * u, s2 * u, s3 * u});
                    r.weights.push_back(a3);
                }
        return r;
    }();
    return rule;
}

SphereRule product_sphere_rule(int n_polar) {
    if (n_polar < 1) throw std::invalid_argument("product_sphere_rule: n_polar >= 1");
    SphereRule r;
    const GaussRule& g = gauss_legendre(n_polar);
    const int n_az = 2 * n_polar;
    for (int i = 0; i < n_polar; ++i) {
        const double ct = g.x[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int j = 0; j < n_az; ++j) {
            const double ph = 2.0 * std::numbers::pi * j / n_az;
            r.points.push_back({st * std::cos(ph), st * std::sin(ph), ct});
            r.weights.push_back(g.w[i] / (2.0 * n_az));
        }
    }
    return r;
}

}  // namespace bnsp
