#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace bnsp {

using RadialSymbol = std::function<std::complex<double>(double)>;  // F(k) at fixed t

// Node budget and resolution policy for the oscillatory k-quadrature.
// Node spacing is tied to the largest phase r_max + c*t present in the
// integrand (both the j_l(kr) factor and the e^{i c k t}-type oscillation
// of the symbol itself).
struct TransformOptions {
    double points_per_period = 40.0;   // k-nodes per 2*pi/(r_max + ct)
    int gl_order = 8;
    std::size_t max_nodes = 4'000'000;
    double kmin = 0.0;
};

// Shared k-grid for one synthesis pass: panels of GL nodes with weights.
struct KGrid {
    std::vector<double> k;
    std::vector<double> w;
};

// Builds the k-grid for [kmin, kmax] given the oscillation scale
// phase_scale = r_max + c*t.  Throws std::length_error past the budget.
KGrid build_kgrid(double kmax, double phase_scale, const TransformOptions& opt = {});

// f(r) = (1/2pi^2) int F(k) k^2 j0(kr) dk  — inverse transform of a radial
// scalar symbol.
std::vector<std::complex<double>> radial_inverse_scalar(
    const RadialSymbol& F, const std::vector<double>& r, const KGrid& grid);

// Inverse transform of i xihat F(k): field V(r) xhat with
// V(r) = -(1/2pi^2) int F(k) k^2 j1(kr) dk.
std::vector<std::complex<double>> radial_inverse_vector(
    const RadialSymbol& F, const std::vector<double>& r, const KGrid& grid);

// Inverse transform of F(k) xihat xihat^T: A(r) I + B(r) xhat xhat^T with
//   A(r) =  (1/2pi^2) int F k^2 (j1(kr)/(kr)) dk,
//   B(r) = -(1/2pi^2) int F k^2 j2(kr) dk.
struct TensorProfiles {
    std::vector<std::complex<double>> iso;    // A(r)
    std::vector<std::complex<double>> aniso;  // B(r)
};

TensorProfiles radial_inverse_tensor(const RadialSymbol& F,
                                     const std::vector<double>& r, const KGrid& grid);

// Forward transform of radial samples is not needed; data transforms use
// closed forms (special.hpp).

}  // namespace bnsp
