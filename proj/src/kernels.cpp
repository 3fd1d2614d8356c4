#include "phardy/kernels.hpp"

#include <cmath>
#include <numbers>

#include "phardy/errors.hpp"
#include "phardy/hardy.hpp"
#include "phardy/parallel.hpp"

namespace phardy {

namespace {

constexpr double kSingularTol = 1e-300;

double point_cosine(const KernelPoint& p) {
  if (p.theta.size() != p.theta_prime.size()) {
    throw DomainError("kernel point: theta and theta' differ in dimension");
  }
  return cosine_between(p.theta, p.theta_prime);
}

void check_kernel_dimension(int d, const KernelPoint& p) {
  if (static_cast<int>(p.theta.size()) != d) {
    throw DomainError("kernel point: direction dimension differs from d");
  }
}

// sum_{k <= k_max} w^k Z_k(c).
Complex zonal_series(int d, Complex w, double c, int k_max) {
  Complex sum{};
  Complex wk = 1.0;
  for (int k = 0; k <= k_max; ++k) {
    sum += wk * eval_zonal(d, k, c);
    wk *= w;
  }
  return sum;
}

// sum_{j <= j_max} w^{2j}.
Complex even_geometric(Complex w, int j_max) {
  Complex sum{};
  Complex term = 1.0;
  const Complex w2 = w * w;
  for (int j = 0; j <= j_max; ++j) {
    sum += term;
    term *= w2;
  }
  return sum;
}

}  // namespace

Complex inverse_half_power(int d, Complex w, double c) {
  c = std::clamp(c, -1.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const Complex e(c, s);
  const Complex f1 = 1.0 - e * w;
  const Complex f2 = 1.0 - std::conj(e) * w;
  if (std::abs(f1) < kSingularTol || std::abs(f2) < kSingularTol) {
    throw SingularityError("kernel quadratic vanishes");
  }
  return std::exp(-0.5 * d * (std::log(f1) + std::log(f2)));
}

Complex cauchy_kernel_series(int d, const KernelPoint& p, int k_max,
                             int j_max) {
  check_kernel_dimension(d, p);
  const Complex w = p.zeta * p.z;
  if (!(std::abs(w) < 1.0)) {
    throw DomainError("Cauchy kernel series diverges for |zeta z| >= 1");
  }
  return even_geometric(w, j_max) * zonal_series(d, w, point_cosine(p), k_max);
}

Complex cauchy_kernel(int d, const KernelPoint& p) {
  check_kernel_dimension(d, p);
  const Complex w = p.zeta * p.z;
  if (!(std::abs(w) < 1.0)) {
    throw DomainError("Cauchy kernel requires |zeta z| < 1");
  }
  return inverse_half_power(d, w, point_cosine(p)) / sphere_area(d);
}

Complex poisson_kernel_c(int d, Complex w, double c) {
  if (!(std::abs(w) < 1.0)) throw DomainError("Poisson kernel needs |w| < 1");
  if (!(std::abs(c) <= 1.0 + 1e-12)) {
    throw DomainError("Poisson kernel cosine must lie in [-1, 1]");
  }
  return (1.0 - w * w) * inverse_half_power(d, w, c) / sphere_area(d);
}

Complex poisson_kernel_series(int d, Complex w, double c, int k_max) {
  if (!(std::abs(w) < 1.0)) throw DomainError("Poisson series needs |w| < 1");
  return zonal_series(d, w, c, k_max);
}

Complex hua_aronszajn_kernel(int d, const KernelPoint& p) {
  check_kernel_dimension(d, p);
  if (!(std::abs(p.zeta) < std::abs(p.z))) {
    throw DomainError("Hua-Aronszajn kernel requires |zeta| < |z|");
  }
  const Complex w = p.zeta / p.z;
  return inverse_half_power(d, w, point_cosine(p)) / (sphere_area(d) * p.z);
}

Complex hua_aronszajn_series(int d, const KernelPoint& p, int k_max,
                             int j_max) {
  check_kernel_dimension(d, p);
  if (!(std::abs(p.zeta) < std::abs(p.z))) {
    throw DomainError("Hua-Aronszajn series requires |zeta| < |z|");
  }
  const Complex w = p.zeta / p.z;
  return even_geometric(w, j_max) * zonal_series(d, w, point_cosine(p), k_max) /
         p.z;
}

Complex reproduce(const AlmansiTable& table, Complex zeta,
                  std::span<const double> theta_prime, const SphereRule& rule,
                  int n_phi, ReproductionRoute route) {
  const int d = table.dimension();
  if (rule.d != d) throw PreconditionError("reproduce: rule dimension mismatch");
  if (!(std::abs(zeta) < 1.0)) throw DomainError("reproduce: |zeta| must be < 1");
  if (static_cast<int>(theta_prime.size()) != d) {
    throw DomainError("reproduce: theta' has wrong dimension");
  }
  if (table.empty()) return {};
  if (rule.exact_degree < 2 * table.max_k()) {
    throw PreconditionError(
        "reproduce: sphere rule degree must be >= 2 max k of the table");
  }
  if (n_phi <= 2 * table.max_frequency()) {
    throw PreconditionError(
        "reproduce: n_phi must exceed twice the largest circle frequency");
  }
  const BoundaryTable trace = boundary_trace(table);
  const double omega = sphere_area(d);
  const double r = std::abs(zeta);
  const double phi_prime = std::arg(zeta);
  const std::size_t n_nodes = rule.nodes.size();
  std::vector<double> cosines(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    cosines[i] = cosine_between(rule.nodes[i], theta_prime);
  }

  std::vector<Complex> rows(n_phi);
  parallel_for(static_cast<std::size_t>(n_phi), [&](std::size_t p) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(p) / n_phi;
    const Complex z = std::polar(1.0, phi);
    const Complex w = zeta / z;
    Complex row{};
    for (std::size_t i = 0; i < n_nodes; ++i) {
      const Complex boundary = evaluate_trace(trace, phi, rule.nodes[i]);
      Complex kernel;
      if (route == ReproductionRoute::cauchy) {
        // K(zeta, theta'; 1/z, theta) depends on zeta * (1/z).
        kernel = inverse_half_power(d, w, cosines[i]) / omega;
      } else {
        const double rho = r * r;
        const double angle = 2.0 * phi - 2.0 * phi_prime;
        const double poisson_2d =
            (1.0 - rho * rho) / (1.0 - 2.0 * rho * std::cos(angle) + rho * rho);
        kernel = poisson_2d * poisson_kernel_c(d, w, cosines[i]);
      }
      row += rule.weights[i] * kernel * boundary;
    }
    rows[p] = row;
  });
  Complex sum{};
  for (const auto& row : rows) sum += row;
  return sum / static_cast<double>(n_phi);
}

}  // namespace phardy
