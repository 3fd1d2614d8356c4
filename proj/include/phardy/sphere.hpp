#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace phardy {

/// Spherical-harmonic mode (k, l): degree k >= 0, 1 <= l <= a_k.
///
/// Basis ordering within a degree:
///   d = 2: l = 1 is cos(k phi), l = 2 is sin(k phi) (k >= 1).
///   d = 3: l = 1 is the zonal m = 0 function, l = 2m is the cos(m phi)
///          member and l = 2m + 1 the sin(m phi) member of order m.
struct ModeIndex {
  int k = 0;
  int l = 1;

  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

/// Surface area of S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
double sphere_area(int d);

/// a_k = dim H_k(R^d), the number of linearly independent spherical
/// harmonics of degree k.
std::int64_t harmonic_dimension(int d, int k);

/// Throws DomainError unless 1 <= mode.l <= a_k.
void check_mode(int d, ModeIndex mode);

/// Every mode with k <= k_max in (k, l) order.
std::vector<ModeIndex> modes_up_to(int d, int k_max);

/// Real orthonormal spherical harmonic Y_{k,l}(theta). Pointwise evaluation is
/// available for d in {2, 3}; other d throw CapabilityError.
double eval_harmonic(int d, ModeIndex mode, std::span<const double> theta);

/// All Y_{k,l}(theta), l = 1..a_k, in one pass.
std::vector<double> eval_harmonics_of_degree(int d, int k,
                                             std::span<const double> theta);

/// Y_{k,l}(theta) for every k <= k_max; result[k][l - 1].
std::vector<std::vector<double>> eval_harmonics_up_to(
    int d, int k_max, std::span<const double> theta);

/// Gegenbauer polynomial P_k^lambda(t), normalized by the generating function
/// (1 - 2tw + w^2)^{-lambda} = sum_k P_k^lambda(t) w^k. Requires lambda > 0.
double eval_gegenbauer(double lambda, int k, double t);

/// Zonal harmonic sum_l Y_{k,l}(theta) Y_{k,l}(theta') as a function of
/// c = <theta, theta'>. Valid for every d >= 2.
double eval_zonal(int d, int k, double c);

/// sqrt(a_k / omega_d): by the addition theorem, sup_theta |Y_{k,l}(theta)|
/// over all l of degree k.
double harmonic_sup_bound(int d, int k);

/// Quadrature on S^{d-1} exact for polynomials of degree <= exact_degree.
struct SphereRule {
  int d = 0;
  int exact_degree = 0;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
};

/// d = 2: exact_degree + 1 equispaced angles. d = 3: Gauss-Legendre in the
/// polar cosine times equispaced azimuth.
SphereRule build_sphere_rule(int d, int exact_degree);

/// Euclidean inner product of two points, clamped to [-1, 1].
double cosine_between(std::span<const double> a, std::span<const double> b);

}  // namespace phardy
