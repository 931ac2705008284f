#include "bnsp/radial_transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bnsp/quadrature.hpp"
#include "bnsp/special.hpp"

namespace bnsp {

KGrid build_kgrid(double kmax, double phase_scale, const TransformOptions& opt) {
    if (!(kmax > opt.kmin)) throw std::invalid_argument("build_kgrid: kmax <= kmin");
    const double period = 2.0 * std::numbers::pi / std::max(phase_scale, 1.0);
    const double spacing = period / opt.points_per_period;
    const double panel = spacing * opt.gl_order;
    const int n_panels =
        std::max(4, static_cast<int>(std::ceil((kmax - opt.kmin) / panel)));
    const std::size_t nodes = static_cast<std::size_t>(n_panels) * opt.gl_order;
    if (nodes > opt.max_nodes)
        throw std::length_error("build_kgrid: node budget exceeded (" +
                                std::to_string(nodes) + " nodes)");
    const GaussRule& g = gauss_legendre(opt.gl_order);
    KGrid kg;
    kg.k.reserve(nodes);
    kg.w.reserve(nodes);
    const double h = (kmax - opt.kmin) / n_panels;
    for (int i = 0; i < n_panels; ++i) {
        const double mid = opt.kmin + (i + 0.5) * h;
        for (std::size_t j = 0; j < g.x.size(); ++j) {
            kg.k.push_back(mid + 0.5 * h * g.x[j]);
            kg.w.push_back(0.5 * h * g.w[j]);
        }
    }
    return kg;
}

namespace {

template <typename Kernel>
std::vector<std::complex<double>> transform(const RadialSymbol& F,
                                            const std::vector<double>& r,
                                            const KGrid& grid, Kernel kernel,
                                            double sign) {
    const std::size_t nk = grid.k.size();
    std::vector<std::complex<double>> fk(nk);
    for (std::size_t i = 0; i < nk; ++i) {
        const double k = grid.k[i];
        fk[i] = F(k) * (k * k * grid.w[i]);
    }
    const double norm = sign / (2.0 * std::numbers::pi * std::numbers::pi);
    std::vector<std::complex<double>> out(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        std::complex<double> acc = 0.0;
        const double rj = r[j];
        for (std::size_t i = 0; i < nk; ++i) acc += fk[i] * kernel(grid.k[i] * rj);
        out[j] = norm * acc;
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> radial_inverse_scalar(const RadialSymbol& F,
                                                        const std::vector<double>& r,
                                                        const KGrid& grid) {
    return transform(F, r, grid, [](double z) { return sph_j0(z); }, 1.0);
}

std::vector<std::complex<double>> radial_inverse_vector(const RadialSymbol& F,
                                                        const std::vector<double>& r,
                                                        const KGrid& grid) {
    return transform(F, r, grid, [](double z) { return sph_j1(z); }, -1.0);
}

TensorProfiles radial_inverse_tensor(const RadialSymbol& F,
                                     const std::vector<double>& r, const KGrid& grid) {
    TensorProfiles tp;
    tp.iso = transform(F, r, grid, [](double z) { return sph_j1_over_z(z); }, 1.0);
    tp.aniso = transform(F, r, grid, [](double z) { return sph_j2(z); }, -1.0);
    return tp;
}

}  // namespace bnsp
