#pragma once

#include <span>
#include <vector>

#include "phardy/almansi.hpp"

namespace phardy {

/// Arguments of the two-point kernels: interior point (zeta, theta') and
/// boundary or general point (z, theta). Only c = <theta, theta'> enters, so
/// kernels work in every d >= 2.
struct KernelPoint {
  Complex zeta;
  std::vector<double> theta_prime;
  Complex z;
  std::vector<double> theta;
};

/// ((1 - e^{i psi} w)(1 - e^{-i psi} w))^{-d/2} with cos psi = c, using the
/// principal logarithm of each factor. Both factors have positive real part
/// for |w| < 1, so the result is continuous on the unit disc.
Complex inverse_half_power(int d, Complex w, double c);

/// Truncated Cauchy-type kernel
///   sum_{j <= j_max} sum_{k <= k_max} (zeta z)^{2j+k} Z_k(c).
Complex cauchy_kernel_series(int d, const KernelPoint& p, int k_max,
                             int j_max);

/// Closed form (1/omega_d) (1 - 2 zeta z c + zeta^2 z^2)^{-d/2}.
Complex cauchy_kernel(int d, const KernelPoint& p);

/// Complexified Poisson kernel (1/omega_d)(1 - w^2)(1 - 2wc + w^2)^{-d/2}.
Complex poisson_kernel_c(int d, Complex w, double c);

/// sum_{k <= k_max} w^k Z_k(c).
Complex poisson_kernel_series(int d, Complex w, double c, int k_max);

/// Hua-Aronszajn kernel (1/omega_d) z^{d-1} (zeta^2 - 2 zeta z c + z^2)^{-d/2},
/// with the power taken as z^{-d} times the factored branch in w = zeta / z.
/// Requires |zeta| < |z|.
Complex hua_aronszajn_kernel(int d, const KernelPoint& p);

/// (1/z) sum_{j <= j_max} sum_{k <= k_max} (zeta/z)^{2j+k} Z_k(c).
Complex hua_aronszajn_series(int d, const KernelPoint& p, int k_max,
                             int j_max);

enum class ReproductionRoute {
  /// K(zeta, theta'; 1/z, theta) against f*(z, theta).
  cauchy,
  /// P_{r^2}(2 phi - 2 phi') K_P(zeta / z, theta, theta') against f*.
  modified_poisson,
};

/// Recovers f(zeta theta') from boundary values on |z| = 1 by
///   (1 / 2 pi) int_0^{2pi} int_{S^{d-1}} kernel * f*(e^{i phi}, theta),
/// with the sphere integral done by `rule` and the circle by an n_phi-point
/// trapezoid rule. Requires rule.exact_degree >= 2 max_k(table) and
/// n_phi > 2 max_frequency(table). The kernel is not polynomial, so the
/// quadrature error decays like |zeta|^{exact_degree - max_k} and
/// |zeta|^{n_phi}; both should be chosen well above those minimums.
Complex reproduce(const AlmansiTable& table, Complex zeta,
                  std::span<const double> theta_prime, const SphereRule& rule,
                  int n_phi,
                  ReproductionRoute route = ReproductionRoute::cauchy);

}  // namespace phardy
