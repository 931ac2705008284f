#include "bnsp/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bnsp {

const char* entry_name(Entry e) {
    switch (e) {
        case Entry::G11: return "11";
        case Entry::G12: return "12";
        case Entry::G21: return "21";
        case Entry::G22Iso: return "22iso";
        case Entry::G22Aniso: return "22aniso";
    }
    return "?";
}

const char* band_name(Band b) {
    switch (b) {
        case Band::Long: return "long";
        case Band::Mid: return "mid";
        case Band::Short: return "short";
        case Band::All: return "all";
    }
    return "?";
}

double SingularLedger::delta_amplitude(double t) const {
    return has_delta ? std::exp(-delta_rate * t) : 0.0;
}

namespace {

GreenHat full_symbol(System sys, double k, double t, const FluidParams& p) {
    return sys == System::NS ? ghat_ns(k, t, p) : ghat_nsp(k, t, p);
}

BlockSymbol singular_branch(System sys, double k, double t, const FluidParams& p) {
    const EigenPair e = system_eigen(sys, k, p);
    const double coupling = sys == System::NS ? p.c2() * k : nsp_coupling(k, p);
    return std::exp(e.lambda_plus * t) * detail::l1_matrix(e, k, coupling);
}

}  // namespace

BlockSymbol regular_symbol(System sys, double k, double t, const FluidParams& p,
                           const BandCutoffs& bands, Band band) {
    const CutoffTriplet chi = cutoffs(k, bands);
    switch (band) {
        case Band::Long: {
            if (chi.chi1 == 0.0) return {};
            return chi.chi1 * full_symbol(sys, k, t, p).b;
        }
        case Band::Mid: {
            if (chi.chi2 == 0.0) return {};
            return chi.chi2 * full_symbol(sys, k, t, p).b;
        }
        case Band::Short: {
            if (chi.chi3 == 0.0) return {};
            return chi.chi3 * (full_symbol(sys, k, t, p).b - singular_branch(sys, k, t, p));
        }
        case Band::All: {
            BlockSymbol b = full_symbol(sys, k, t, p).b;
            if (chi.chi3 > 0.0) b = b - chi.chi3 * singular_branch(sys, k, t, p);
            return b;
        }
    }
    return {};
}

std::complex<double> entry_amplitude(const BlockSymbol& b, Entry e) {
    const Complex mi(0.0, -1.0);
    switch (e) {
        case Entry::G11: return b.s;
        case Entry::G12: return mi * b.row;  // block = i xihat^T * (row/i)
        case Entry::G21: return mi * b.col;
        case Entry::G22Iso: return b.iso;
        case Entry::G22Aniso: return b.aniso;
    }
    return 0.0;
}

double synthesis_kmax(double t, const FluidParams& p, const BandCutoffs& bands) {
    // Slowest k-decay of the regular symbol is the e^{-mu1 k^2 t} factor;
    // the mid-band lambda_plus branch survives until e^{-c^2 t / mu} dies.
    const double k_heat = std::sqrt(40.0 / (p.mu1 * std::max(t, 0.02)));
    const double t_mid = 33.0 * p.mu() / p.c2();
    double kmax = k_heat;
    if (t < t_mid) kmax = std::max(kmax, bands.K + 1.5);
    return std::max(kmax, 2.0 * bands.eps1 + 0.5);
}

SynthesisResult synthesize_kernel(System sys, Entry e, double t,
                                  const std::vector<double>& r_grid,
                                  const FluidParams& p, const BandCutoffs& bands,
                                  Band band, const TransformOptions& opt) {
    if (r_grid.empty()) throw std::invalid_argument("synthesize_kernel: empty r grid");
    const double rmax = *std::max_element(r_grid.begin(), r_grid.end());
    const double kmax = synthesis_kmax(t, p, bands);
    TransformOptions o = opt;
    o.kmin = 1e-9;
    const KGrid grid = build_kgrid(kmax, rmax + p.c() * t + 1.0, o);

    SynthesisResult out;
    out.profile.r = r_grid;
    out.profile.t = t;
    out.profile.entry = entry_name(e);
    out.ledger.entry = entry_name(e);
    out.ledger.has_delta = (e == Entry::G11);
    out.ledger.delta_rate = p.c2() / p.mu();
    out.ledger.tail.b = 0.5 * p.c2() / p.mu();

    auto amp = [&](Entry which) {
        return [=, &p, &bands](double k) {
            return entry_amplitude(regular_symbol(sys, k, t, p, bands, band), which);
        };
    };

    switch (e) {
        case Entry::G11:
            out.profile.values = radial_inverse_scalar(amp(Entry::G11), r_grid, grid);
            break;
        case Entry::G12:
            out.profile.values = radial_inverse_vector(amp(Entry::G12), r_grid, grid);
            break;
        case Entry::G21:
            out.profile.values = radial_inverse_vector(amp(Entry::G21), r_grid, grid);
            break;
        case Entry::G22Iso: {
            auto iso_part = radial_inverse_scalar(amp(Entry::G22Iso), r_grid, grid);
            auto tp = radial_inverse_tensor(amp(Entry::G22Aniso), r_grid, grid);
            out.profile.values.resize(r_grid.size());
            for (std::size_t i = 0; i < r_grid.size(); ++i)
                out.profile.values[i] = iso_part[i] + tp.iso[i];
            break;
        }
        case Entry::G22Aniso: {
            auto tp = radial_inverse_tensor(amp(Entry::G22Aniso), r_grid, grid);
            out.profile.values = tp.aniso;
            break;
        }
    }
    return out;
}

std::vector<double> synthesize_on_grid(Fft3& fft, System sys, Entry e, double t,
                                       const FluidParams& p, const BandCutoffs& bands,
                                       Band band) {
    const Grid3& g = fft.grid();
    std::vector<std::complex<double>> spec(g.spec_size());
    const double scale = 1.0 / (g.h() * g.h() * g.h());
    fft.for_each_mode([&](std::size_t idx, double kx, double ky, double kz) {
        const double k = std::sqrt(kx * kx + ky * ky + kz * kz);
        Complex v = 0.0;
        if (k == 0.0) {
            // Angular-average value of the symbol's k -> 0 limit.
            switch (e) {
                case Entry::G11:
                    v = (sys == System::NS) ? Complex(1.0, 0.0)
                                            : Complex(nsp_plasma_g11(t), 0.0);
                    break;
                case Entry::G22Iso: {
                    const double aniso0 =
                        (sys == System::NS) ? 0.0 : nsp_plasma_g11(t) - 1.0;
                    v = Complex(1.0 + aniso0 / 3.0, 0.0);
                    break;
                }
                default:
                    v = 0.0;
            }
            if (band == Band::Mid || band == Band::Short) v = 0.0;
        } else {
            const BlockSymbol b = regular_symbol(sys, k, t, p, bands, band);
            switch (e) {
                case Entry::G11: v = b.s; break;
                case Entry::G12: v = b.row * (kx / k); break;
                case Entry::G21: v = b.col * (kx / k); break;
                case Entry::G22Iso: v = b.iso + b.aniso * (kx / k) * (kx / k); break;
                case Entry::G22Aniso: v = b.aniso * (kx / k) * (ky / k); break;
            }
        }
        spec[idx] = v * scale;
    });
    std::vector<double> out;
    fft.inverse(spec, out);
    return out;
}

namespace {

double interp_profile(const std::vector<double>& r, const std::vector<double>& v,
                      double x) {
    // Catmull-Rom on a uniform grid.
    const double h = r[1] - r[0];
    if (x <= r.front()) return v.front();
    if (x >= r.back()) return v.back();
    const double u = (x - r.front()) / h;
    std::size_t i = static_cast<std::size_t>(u);
    if (i + 2 >= r.size()) return v.back();
    const double f = u - i;
    const double pm1 = (i == 0) ? v[0] : v[i - 1];
    const double p0 = v[i], p1 = v[i + 1];
    const double p2 = (i + 2 < v.size()) ? v[i + 2] : v[i + 1];
    const double a = -0.5 * pm1 + 1.5 * p0 - 1.5 * p1 + 0.5 * p2;
    const double b = pm1 - 2.5 * p0 + 2.0 * p1 - 0.5 * p2;
    const double c = -0.5 * pm1 + 0.5 * p1;
    return ((a * f + b) * f + c) * f + p0;
}

}  // namespace

std::vector<double> radial_prediction_on_grid(const Grid3& g, System sys, Entry e,
                                              double t, const FluidParams& p,
                                              const BandCutoffs& bands,
                                              const TransformOptions& opt) {
    const double rmax = 0.5 * g.L * std::sqrt(3.0) + 1.0;
    const double dr = std::min(0.02, g.h() / 8.0);
    std::vector<double> rg;
    for (double r = 0.0; r <= rmax; r += dr) rg.push_back(r);

    // Radial kernels needed to assemble the requested Cartesian component.
    std::vector<double> prim, seco;
    const Band band = Band::All;
    if (e == Entry::G22Iso || e == Entry::G22Aniso) {
        auto a = synthesize_kernel(sys, Entry::G22Iso, t, rg, p, bands, band, opt);
        auto b = synthesize_kernel(sys, Entry::G22Aniso, t, rg, p, bands, band, opt);
        prim.resize(rg.size());
        seco.resize(rg.size());
        for (std::size_t i = 0; i < rg.size(); ++i) {
            prim[i] = a.profile.values[i].real();
            seco[i] = b.profile.values[i].real();
        }
    } else {
        auto a = synthesize_kernel(sys, e, t, rg, p, bands, band, opt);
        prim.resize(rg.size());
        for (std::size_t i = 0; i < rg.size(); ++i) prim[i] = a.profile.values[i].real();
    }

    std::vector<double> out(g.size());
    std::size_t idx = 0;
    for (int ix = 0; ix < g.n; ++ix) {
        const double x = g.delta(ix, 0);
        for (int iy = 0; iy < g.n; ++iy) {
            const double y = g.delta(iy, 0);
            for (int iz = 0; iz < g.n; ++iz, ++idx) {
                const double z = g.delta(iz, 0);
                const double r = std::sqrt(x * x + y * y + z * z);
                double val = 0.0;
                switch (e) {
                    case Entry::G11: val = interp_profile(rg, prim, r); break;
                    case Entry::G12:
                    case Entry::G21: {
                        const double V = interp_profile(rg, prim, r);
                        val = (r > 0.0) ? V * (x / r) : 0.0;
                        break;
                    }
                    case Entry::G22Iso: {
                        const double A = interp_profile(rg, prim, r);
                        const double B = interp_profile(rg, seco, r);
                        val = A + ((r > 0.0) ? B * (x / r) * (x / r) : B / 3.0);
                        break;
                    }
                    case Entry::G22Aniso: {
                        const double B = interp_profile(rg, seco, r);
                        val = (r > 0.0) ? B * (x / r) * (y / r) : 0.0;
                        break;
                    }
                }
                out[idx] = val;
            }
        }
    }
    return out;
}

double rel_linf(const std::vector<double>& ref, const std::vector<double>& other) {
    if (ref.size() != other.size()) throw std::invalid_argument("rel_linf: size mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        num = std::max(num, std::abs(ref[i] - other[i]));
        den = std::max(den, std::abs(ref[i]));
    }
    return den > 0.0 ? num / den : num;
}

}  // namespace bnsp
