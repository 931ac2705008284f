#include "bnsp/special.hpp"

#include <numbers>
#include <stdexcept>

namespace bnsp {

double algebraic_bump_hat(double nu, double k) {
    if (!(nu > 1.5)) throw std::invalid_argument("algebraic_bump_hat: need nu > 3/2");
    const double pi32 = std::pow(std::numbers::pi, 1.5);
    if (k < 1e-10) return pi32 * std::tgamma(nu - 1.5) / std::tgamma(nu);
    const double order = nu - 1.5;
    return std::pow(2.0, 2.5 - nu) * pi32 / std::tgamma(nu) *
           std::pow(k, order) * std::cyl_bessel_k(order, k);
}

}  // namespace bnsp
