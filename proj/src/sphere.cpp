#include "phardy/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "phardy/errors.hpp"
#include "phardy/quadrature.hpp"

namespace phardy {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dimension(int d) {
  if (d < 2) throw DomainError("ambient dimension d must be >= 2");
}

void check_pointwise_dimension(int d) {
  check_dimension(d);
  if (d > 3) {
    throw CapabilityError("pointwise spherical harmonics are implemented for "
                          "d in {2, 3} only, got d = " +
                          std::to_string(d));
  }
}

void check_unit(int d, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != d) {
    throw DomainError("point has " + std::to_string(theta.size()) +
                      " coordinates, expected " + std::to_string(d));
  }
  double norm2 = 0.0;
  for (double v : theta) norm2 += v * v;
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw DomainError("point is not on the unit sphere");
  }
}

// Binomial coefficient with overflow detection.
std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  __int128 result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > std::numeric_limits<std::int64_t>::max()) {
      throw ResourceError("harmonic_dimension overflows 64-bit integers");
    }
  }
  return static_cast<std::int64_t>(result);
}

// d = 3 harmonics for all degrees up to k_max. Q_n^m below is the fully
// normalized associated Legendre function with the sin^m factor removed; the
// azimuthal part comes from (x + iy)^m so that theta -> -theta flips signs
// exactly.
std::vector<std::vector<double>> harmonics_3d(int k_max,
                                              std::span<const double> theta) {
  const double x = theta[0];
  const double y = theta[1];
  const double z = theta[2];
  std::vector<std::vector<double>> out(k_max + 1);
  for (int k = 0; k <= k_max; ++k) out[k].assign(2 * k + 1, 0.0);

  double qmm = 1.0 / std::sqrt(4.0 * kPi);
  std::complex<double> azimuth(1.0, 0.0);
  const std::complex<double> xy(x, y);
  for (int m = 0; m <= k_max; ++m) {
    if (m > 0) {
      qmm *= std::sqrt((2.0 * m + 1.0) / (2.0 * m));
      azimuth *= xy;
    }
    double q_prev = 0.0;
    double q_cur = qmm;
    double a_prev = 0.0;
    for (int n = m; n <= k_max; ++n) {
      if (n == m + 1) {
        q_prev = q_cur;
        q_cur = std::sqrt(2.0 * m + 3.0) * z * qmm;
        a_prev = std::sqrt(2.0 * m + 3.0);
      } else if (n > m + 1) {
        const double nn = static_cast<double>(n);
        const double a = std::sqrt((4.0 * nn * nn - 1.0) /
                                   (nn * nn - static_cast<double>(m) * m));
        const double next = a * (z * q_cur - q_prev / a_prev);
        q_prev = q_cur;
        q_cur = next;
        a_prev = a;
      }
      if (m == 0) {
        out[n][0] = q_cur;
      } else {
        out[n][2 * m - 1] = std::numbers::sqrt2 * q_cur * azimuth.real();
        out[n][2 * m] = std::numbers::sqrt2 * q_cur * azimuth.imag();
      }
    }
  }
  return out;
}

std::vector<std::vector<double>> harmonics_2d(int k_max,
                                              std::span<const double> theta) {
  std::vector<std::vector<double>> out(k_max + 1);
  out[0] = {1.0 / std::sqrt(2.0 * kPi)};
  const double scale = 1.0 / std::sqrt(kPi);
  const std::complex<double> e(theta[0], theta[1]);
  std::complex<double> power(1.0, 0.0);
  for (int k = 1; k <= k_max; ++k) {
    power *= e;
    out[k] = {scale * power.real(), scale * power.imag()};
  }
  return out;
}

}  // namespace

double sphere_area(int d) {
  check_dimension(d);
  return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

std::int64_t harmonic_dimension(int d, int k) {
  check_dimension(d);
  if (k < 0) throw DomainError("harmonic degree k must be >= 0");
  if (d == 2) return k == 0 ? 1 : 2;
  return binomial(k + d - 1, d - 1) - binomial(k + d - 3, d - 1);
}

void check_mode(int d, ModeIndex mode) {
  if (mode.k < 0) throw DomainError("mode degree k must be >= 0");
  if (mode.l < 1 || mode.l > harmonic_dimension(d, mode.k)) {
    throw DomainError("mode index l = " + std::to_string(mode.l) +
                      " out of range for k = " + std::to_string(mode.k));
  }
}

std::vector<ModeIndex> modes_up_to(int d, int k_max) {
  std::vector<ModeIndex> modes;
  for (int k = 0; k <= k_max; ++k) {
    const auto a = harmonic_dimension(d, k);
    for (int l = 1; l <= a; ++l) modes.push_back({k, l});
  }
  return modes;
}

std::vector<std::vector<double>> eval_harmonics_up_to(
    int d, int k_max, std::span<const double> theta) {
  check_pointwise_dimension(d);
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  check_unit(d, theta);
  return d == 2 ? harmonics_2d(k_max, theta) : harmonics_3d(k_max, theta);
}

std::vector<double> eval_harmonics_of_degree(int d, int k,
                                             std::span<const double> theta) {
  if (k < 0) throw DomainError("harmonic degree k must be >= 0");
  auto all = eval_harmonics_up_to(d, k, theta);
  return std::move(all[k]);
}

double eval_harmonic(int d, ModeIndex mode, std::span<const double> theta) {
  check_pointwise_dimension(d);
  check_mode(d, mode);
  return eval_harmonics_of_degree(d, mode.k, theta)[mode.l - 1];
}

double eval_gegenbauer(double lambda, int k, double t) {
  if (!(lambda > 0.0)) throw DomainError("Gegenbauer parameter must be > 0");
  if (k < 0) throw DomainError("Gegenbauer degree must be >= 0");
  if (k == 0) return 1.0;
  double p0 = 1.0;
  double p1 = 2.0 * lambda * t;
  for (int n = 2; n <= k; ++n) {
    const double p2 =
        (2.0 * t * (n + lambda - 1.0) * p1 - (n + 2.0 * lambda - 2.0) * p0) /
        n;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double eval_zonal(int d, int k, double c) {
  check_dimension(d);
  if (k < 0) throw DomainError("zonal degree k must be >= 0");
  if (!(std::abs(c) <= 1.0 + 1e-12)) {
    throw DomainError("zonal argument must lie in [-1, 1]");
  }
  c = std::clamp(c, -1.0, 1.0);
  if (d == 2) {
    if (k == 0) return 1.0 / (2.0 * kPi);
    double t0 = 1.0;
    double t1 = c;
    for (int n = 2; n <= k; ++n) {
      const double t2 = 2.0 * c * t1 - t0;
      t0 = t1;
      t1 = t2;
    }
    return t1 / kPi;
  }
  const double lambda = 0.5 * (d - 2);
  return (2.0 * k + d - 2.0) / ((d - 2.0) * sphere_area(d)) *
         eval_gegenbauer(lambda, k, c);
}

double harmonic_sup_bound(int d, int k) {
  return std::sqrt(static_cast<double>(harmonic_dimension(d, k)) /
                   sphere_area(d));
}

SphereRule build_sphere_rule(int d, int exact_degree) {
  check_pointwise_dimension(d);
  if (exact_degree < 0) throw DomainError("exact_degree must be >= 0");
  SphereRule rule;
  rule.d = d;
  rule.exact_degree = exact_degree;
  const int n_phi = exact_degree + 1;
  if (d == 2) {
    for (int i = 0; i < n_phi; ++i) {
      const double phi = 2.0 * kPi * i / n_phi;
      rule.nodes.push_back({std::cos(phi), std::sin(phi)});
      rule.weights.push_back(2.0 * kPi / n_phi);
    }
    return rule;
  }
  const GaussRule polar = gauss_legendre(exact_degree / 2 + 1);
  for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
    const double t = polar.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * kPi * j / n_phi;
      rule.nodes.push_back({s * std::cos(phi), s * std::sin(phi), t});
      rule.weights.push_back(polar.weights[i] * 2.0 * kPi / n_phi);
    }
  }
  return rule;
}

double cosine_between(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::clamp(dot, -1.0, 1.0);
}

}  // namespace phardy
