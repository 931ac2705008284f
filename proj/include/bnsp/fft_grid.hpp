#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bnsp {

// Uniform periodic grid [0, L)^3 with n points per axis.
struct Grid3 {
    int n = 64;
    double L = 128.0;

    double h() const { return L / n; }
    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
    std::size_t spec_size() const {
        return static_cast<std::size_t>(n) * n * (n / 2 + 1);
    }
    double kfund() const;  // 2*pi/L

    // Signed wavenumber of mode index i along a full axis.
    double kaxis(int i) const;

    // Minimum-image displacement of grid index i relative to index c.
    double delta(int i, int c) const;
};

// Real <-> half-complex 3D FFT pair on a fixed grid (FFTW backend).
// Forward is unnormalized; inverse divides by n^3, so inverse(forward(f)) = f.
class Fft3 {
public:
    explicit Fft3(Grid3 g);
    ~Fft3();
    Fft3(const Fft3&) = delete;
    Fft3& operator=(const Fft3&) = delete;

    const Grid3& grid() const { return grid_; }

    void forward(const std::vector<double>& real_in,
                 std::vector<std::complex<double>>& spec_out);
    void inverse(const std::vector<std::complex<double>>& spec_in,
                 std::vector<double>& real_out);

    // Iterates spec-layout modes: fn(index, kx, ky, kz).
    template <typename Fn>
    void for_each_mode(Fn&& fn) const {
        const int n = grid_.n, nh = grid_.n / 2 + 1;
        std::size_t idx = 0;
        for (int ix = 0; ix < n; ++ix) {
            const double kx = grid_.kaxis(ix);
            for (int iy = 0; iy < n; ++iy) {
                const double ky = grid_.kaxis(iy);
                for (int iz = 0; iz < nh; ++iz, ++idx) {
                    const double kz = grid_.kfund() * iz;
                    fn(idx, kx, ky, kz);
                }
            }
        }
    }

private:
    Grid3 grid_;
    void* plan_fwd_ = nullptr;
    void* plan_inv_ = nullptr;
    double* rbuf_ = nullptr;
    void* cbuf_ = nullptr;
};

}  // namespace bnsp
