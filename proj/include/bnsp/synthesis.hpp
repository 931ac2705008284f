#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bnsp/cutoffs.hpp"
#include "bnsp/fft_grid.hpp"
#include "bnsp/fluid_params.hpp"
#include "bnsp/green_nsp.hpp"
#include "bnsp/radial_transform.hpp"

namespace bnsp {

enum class Entry { G11, G12, G21, G22Iso, G22Aniso };
enum class Band { Long, Mid, Short, All };

const char* entry_name(Entry e);
const char* band_name(Band b);

// Physical-space kernel samples on a radial grid.  For vector entries the
// field is value(r) * xhat; for tensor entries G22Iso/G22Aniso the kernel is
// iso(r) I + aniso(r) xhat xhat^T (tagged per component).
struct RadialProfile {
    std::vector<double> r;
    std::vector<std::complex<double>> values;
    double t = 0.0;
    std::string entry;
};

// Parameters of the Dirac-like tail bound |f| <= e^{-b t} ftilde with
// ftilde = C |x|^{-2} inside R and C |x|^{-N} outside.
struct TailParams {
    double C = 1.0;
    double R = 1.0;
    double b = 0.5;
    int N = 6;
};

// Short-wave singular content, never rasterized: a delta at the (1,1)
// entry with coefficient decaying like e^{-(c^2/mu) t}, plus the tail.
struct SingularLedger {
    bool has_delta = false;
    double delta_rate = 0.0;  // c^2/mu
    TailParams tail;
    std::string entry;

    double delta_amplitude(double t) const;
};

// Band-weighted symbol of the synthesizable (regular) kernel: the full
// symbol minus the chi3-weighted lambda_plus branch.  Returns the block.
BlockSymbol regular_symbol(System sys, double k, double t, const FluidParams& p,
                           const BandCutoffs& bands, Band band = Band::All);

// Scalar amplitude of one entry of a block (row/col amplitudes are reported
// as the coefficient of i*xihat, i.e. divided by i, so they are real for
// real kernels).
std::complex<double> entry_amplitude(const BlockSymbol& b, Entry e);

// kmax heuristic for the regular symbol at time t.
double synthesis_kmax(double t, const FluidParams& p, const BandCutoffs& bands);

struct SynthesisResult {
    RadialProfile profile;
    SingularLedger ledger;
};

// Physical-space synthesis of one kernel entry at time t by spherical
// Bessel quadrature.  For G22Iso the profile is the isotropic coefficient
// A(r) of the full tensor block (scalar part of iso plus the tensor-A part
// of aniso); for G22Aniso it is B(r).
SynthesisResult synthesize_kernel(System sys, Entry e, double t,
                                  const std::vector<double>& r_grid,
                                  const FluidParams& p, const BandCutoffs& bands,
                                  Band band = Band::All,
                                  const TransformOptions& opt = {});

// FFT cross-validation: synthesizes one Cartesian component of the same
// regular kernel on a periodic grid.  `component` selects, for vector
// entries, the x-component (field V(r) xhat_x); for tensor entries the
// (xx) or (xy) component.
enum class GridComponent { Scalar, VecX, TensorXX, TensorXY };

std::vector<double> synthesize_on_grid(Fft3& fft, System sys, Entry e, double t,
                                       const FluidParams& p, const BandCutoffs& bands,
                                       Band band = Band::All);

// Predicted grid field from a radial profile set (for comparison with the
// FFT synthesis): evaluates the radial kernels at every grid point.
std::vector<double> radial_prediction_on_grid(const Grid3& g, System sys, Entry e,
                                              double t, const FluidParams& p,
                                              const BandCutoffs& bands,
                                              const TransformOptions& opt = {});

// max|a-b| / max|a|
double rel_linf(const std::vector<double>& ref, const std::vector<double>& other);

}  // namespace bnsp
