#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace bnsp {

// Radially reduced 4x4 Fourier block
//
//   [ s            row * xihat^T                  ]
//   [ col * xihat  iso * I + aniso * xihat xihat^T ]
//
// closed under addition, scaling and matrix products, which is all the
// symbol algebra (generators, propagators, wave pairings) needs.  The
// direction xihat never appears explicitly; materialize() reinstates it.
struct BlockSymbol {
    std::complex<double> s{};
    std::complex<double> row{};
    std::complex<double> col{};
    std::complex<double> iso{};
    std::complex<double> aniso{};

    static BlockSymbol identity() { return {1.0, 0.0, 0.0, 1.0, 0.0}; }

    BlockSymbol operator+(const BlockSymbol& o) const {
        return {s + o.s, row + o.row, col + o.col, iso + o.iso, aniso + o.aniso};
    }
    BlockSymbol operator-(const BlockSymbol& o) const {
        return {s - o.s, row - o.row, col - o.col, iso - o.iso, aniso - o.aniso};
    }
    BlockSymbol operator*(std::complex<double> a) const {
        return {a * s, a * row, a * col, a * iso, a * aniso};
    }

    // Block matrix product (this * o), using xihat^T xihat = 1.
    BlockSymbol mul(const BlockSymbol& o) const {
        BlockSymbol r;
        r.s = s * o.s + row * o.col;
        r.row = s * o.row + row * (o.iso + o.aniso);
        r.col = col * o.s + (iso + aniso) * o.col;
        r.iso = iso * o.iso;
        r.aniso = col * o.row + iso * o.aniso + aniso * o.iso + aniso * o.aniso;
        return r;
    }

    double max_abs() const {
        return std::max({std::abs(s), std::abs(row), std::abs(col),
                         std::abs(iso), std::abs(iso + aniso)});
    }

    // Full 4x4 matrix for a unit direction (row-major).
    std::array<std::complex<double>, 16> materialize(const std::array<double, 3>& xihat) const {
        std::array<std::complex<double>, 16> m{};
        m[0] = s;
        for (int j = 0; j < 3; ++j) {
            m[1 + j] = row * xihat[j];
            m[4 * (1 + j)] = col * xihat[j];
            for (int i = 0; i < 3; ++i)
                m[4 * (1 + j) + 1 + i] =
                    iso * (i == j ? 1.0 : 0.0) + aniso * xihat[j] * xihat[i];
        }
        return m;
    }
};

inline BlockSymbol operator*(std::complex<double> a, const BlockSymbol& b) { return b * a; }

}  // namespace bnsp
