#include "bnsp/fft_grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace bnsp {

double Grid3::kfund() const { return 2.0 * std::numbers::pi / L; }

double Grid3::kaxis(int i) const {
    const int m = (i <= n / 2) ? i : i - n;
    return kfund() * m;
}

double Grid3::delta(int i, int c) const {
    int d = i - c;
    if (d > n / 2) d -= n;
    if (d < -n / 2) d += n;
    return d * h();
}

Fft3::Fft3(Grid3 g) : grid_(g) {
    if (g.n < 4 || g.n % 2 != 0) throw std::invalid_argument("Fft3: n must be even, >= 4");
    rbuf_ = fftw_alloc_real(grid_.size());
    cbuf_ = fftw_alloc_complex(grid_.spec_size());
    plan_fwd_ = fftw_plan_dft_r2c_3d(g.n, g.n, g.n, rbuf_,
                                     static_cast<fftw_complex*>(cbuf_), FFTW_MEASURE);
    plan_inv_ = fftw_plan_dft_c2r_3d(g.n, g.n, g.n, static_cast<fftw_complex*>(cbuf_),
                                     rbuf_, FFTW_MEASURE);
    if (!plan_fwd_ || !plan_inv_) throw std::runtime_error("Fft3: FFTW planning failed");
}

Fft3::~Fft3() {
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
    fftw_free(rbuf_);
    fftw_free(cbuf_);
}

void Fft3::forward(const std::vector<double>& real_in,
                   std::vector<std::complex<double>>& spec_out) {
    if (real_in.size() != grid_.size()) throw std::invalid_argument("Fft3::forward size");
    std::memcpy(rbuf_, real_in.data(), sizeof(double) * grid_.size());
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    spec_out.resize(grid_.spec_size());
    std::memcpy(spec_out.data(), cbuf_, sizeof(fftw_complex) * grid_.spec_size());
}

void Fft3::inverse(const std::vector<std::complex<double>>& spec_in,
                   std::vector<double>& real_out) {
    if (spec_in.size() != grid_.spec_size()) throw std::invalid_argument("Fft3::inverse size");
    std::memcpy(cbuf_, spec_in.data(), sizeof(fftw_complex) * grid_.spec_size());
    fftw_execute(static_cast<fftw_plan>(plan_inv_));
    real_out.resize(grid_.size());
    const double scale = 1.0 / static_cast<double>(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) real_out[i] = rbuf_[i] * scale;
}

}  // namespace bnsp
