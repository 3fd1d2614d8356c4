#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "phardy/errors.hpp"
#include "phardy/kernels.hpp"
#include "phardy/random.hpp"

using namespace phardy;

namespace {

const double kPi = std::numbers::pi;

std::vector<double> e(int d, int axis) {
  std::vector<double> v(d, 0.0);
  v[axis] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("Cauchy kernel special values") {
  for (int d : {2, 3, 4, 5}) {
    const KernelPoint p{0.0, e(d, 0), Complex(0.3, 0.2), e(d, 1)};
    CHECK(std::abs(cauchy_kernel_series(d, p, 10, 10) - 1.0 / sphere_area(d)) < 1e-15);
    CHECK(std::abs(cauchy_kernel(d, p) - 1.0 / sphere_area(d)) < 1e-15);
  }
  for (double w : {0.1, 0.5, 0.8}) {
    const KernelPoint p{w, e(2, 0), 1.0, e(2, 0)};
    CHECK(std::abs(cauchy_kernel(2, p) - 1.0 / (2 * kPi) / ((1 - w) * (1 - w))) < 1e-14);
  }
  const KernelPoint half{Complex(0.4, 0.3), {0.6, 0.8, 0.0}, Complex(0.8, 0.6), {0.0, 0.6, 0.8}};
  CHECK(std::abs(cauchy_kernel(3, half) - cauchy_kernel_series(3, half, 60, 60)) < 1e-8);
}

TEST_CASE("Cauchy series truncation converges geometrically") {
  const KernelPoint p{Complex(0.5, 0.2), {0.6, 0.8, 0.0}, Complex(0.9, -0.1), {1.0, 0.0, 0.0}};
  const Complex exact = cauchy_kernel(3, p);
  double previous = INFINITY;
  for (int n = 5; n <= 45; n += 10) {
    const double err = std::abs(cauchy_kernel_series(3, p, n, n) - exact);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-10);
}

TEST_CASE("complexified Poisson kernel") {
  for (int d : {2, 3, 4}) {
    CHECK(std::abs(poisson_kernel_c(d, 0.0, 0.3) - 1.0 / sphere_area(d)) < 1e-15);
  }
  for (double w : {0.2, 0.7}) {
    for (double psi : {0.0, 1.0, 2.5}) {
      const double c = std::cos(psi);
      const double expect = (1 - w * w) / (1 - 2 * w * c + w * w) / (2 * kPi);
      CHECK(std::abs(poisson_kernel_c(2, w, c) - expect) < 1e-14);
    }
  }
  Rng rng(3);
  for (int d : {2, 3, 4, 6}) {
    for (int s = 0; s < 20; ++s) {
      const Complex w = std::polar(0.5, rng.uniform(0, 2 * kPi));
      const double c = rng.uniform(-1, 1);
      CHECK(std::abs(poisson_kernel_c(d, w, c) - poisson_kernel_series(d, w, c, 80)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(poisson_kernel_c(3, 1.0, 0.2), DomainError);
}

TEST_CASE("Hua-Aronszajn kernel") {
  Rng rng(17);
  for (int d : {2, 3, 4, 5}) {
    const KernelPoint origin{0.0, e(d, 0), 1.0, e(d, 1)};
    CHECK(std::abs(hua_aronszajn_kernel(d, origin) - 1.0 / sphere_area(d)) < 1e-15);
    for (int s = 0; s < 20; ++s) {
      const Complex z = std::polar(rng.uniform(0.8, 1.2), rng.uniform(0, 2 * kPi));
      const Complex zeta = z * std::polar(0.5, rng.uniform(0, 2 * kPi));
      const KernelPoint p{zeta, rng.unit_vector(d), z, rng.unit_vector(d)};
      const double c = cosine_between(p.theta, p.theta_prime);
      const Complex q = zeta / z;
      const Complex h = hua_aronszajn_kernel(d, p);
      // z omega_d H = (1 - 2 (zeta/z) c + zeta^2/z^2)^{-d/2} on the branch
      // continuous from zeta = 0.
      CHECK(std::abs(z * sphere_area(d) * h - inverse_half_power(d, q, c)) < 1e-12);
      const Complex direct = std::pow(1.0 - 2.0 * q * c + q * q, -0.5 * d);
      if (d % 2 == 0) CHECK(std::abs(z * sphere_area(d) * h - direct) < 1e-12);
      CHECK(std::abs(h - hua_aronszajn_series(d, p, 80, 40)) < 1e-8);
    }
  }
  const KernelPoint outside{1.0, e(3, 0), 0.5, e(3, 1)};
  CHECK_THROWS_AS(hua_aronszajn_kernel(3, outside), DomainError);
}

TEST_CASE("branch continuity along paths") {
  // Continue log(1 - 2wc + w^2) from w = 0 in small steps and compare the
  // resulting power with the direct evaluation at every step.
  Rng rng(23);
  for (int d : {3, 5}) {
    for (int path = 0; path < 20; ++path) {
      const Complex end = std::polar(rng.uniform(0.3, 0.97), rng.uniform(0, 2 * kPi));
      const double c = rng.uniform(-0.99, 0.99);
      Complex log_q = 0.0;
      Complex prev_q = 1.0;
      const int steps = 10;
      for (int s = 1; s <= steps; ++s) {
        const Complex w = end * (static_cast<double>(s) / steps);
        const Complex q = 1.0 - 2.0 * w * c + w * w;
        log_q += std::log(q / prev_q);
        prev_q = q;
        const Complex continued = std::exp(-0.5 * d * log_q);
        CHECK(std::abs(continued - inverse_half_power(d, w, c)) <
              1e-11 * std::abs(continued));
      }
    }
  }
}

TEST_CASE("kernel symmetries") {
  Rng rng(29);
  for (int d : {2, 3, 4}) {
    const Complex zeta(0.3, -0.2), z(0.6, 0.5);
    const auto a = rng.unit_vector(d);
    const auto b = rng.unit_vector(d);
    std::vector<double> na(a), nb(b);
    for (auto& v : na) v = -v;
    for (auto& v : nb) v = -v;
    const Complex k1 = cauchy_kernel(d, {zeta, a, z, b});
    CHECK(k1 == cauchy_kernel(d, {zeta, b, z, a}));
    CHECK(std::abs(k1 - cauchy_kernel(d, {-zeta, na, -z, nb})) < 1e-15);
  }
}

TEST_CASE("reproduction of basis elements") {
  Rng rng(31);
  const SphereRule rule2 = build_sphere_rule(2, 60);
  for (int k = 0; k <= 10; ++k) {
    for (int j = 0; j <= 5; ++j) {
      const ModeIndex mode{k, k == 0 ? 1 : 1 + (k + j) % 2};
      const Complex zeta = std::polar(0.5, rng.uniform(0, 2 * kPi));
      const auto theta = rng.unit_vector(2);
      const Complex got = reproduce(AlmansiTable::basis(2, mode, j), zeta, theta, rule2, 96);
      const Complex expect = std::pow(zeta, k + 2 * j) * eval_harmonic(2, mode, theta);
      CHECK(std::abs(got - expect) < 1e-9);
    }
  }
  const SphereRule rule3 = build_sphere_rule(3, 50);
  for (int trial = 0; trial < 8; ++trial) {
    const int k = rng.integer(0, 10);
    const ModeIndex mode{k, rng.integer(1, 2 * k + 1)};
    const int j = rng.integer(0, 5);
    const Complex zeta = std::polar(0.5, rng.uniform(0, 2 * kPi));
    const auto theta = rng.unit_vector(3);
    const Complex got = reproduce(AlmansiTable::basis(3, mode, j), zeta, theta, rule3, 64);
    CHECK(std::abs(got - std::pow(zeta, k + 2 * j) * eval_harmonic(3, mode, theta)) < 1e-9);
  }
}

TEST_CASE("reproduction is linear and both routes agree") {
  Rng rng(37);
  AlmansiTable a(3), b(3);
  for (const auto& mode : modes_up_to(3, 3)) {
    a.set(mode, {{rng.normal(), rng.normal()}, {rng.normal(), 0.0}});
    b.set(mode, {{rng.normal(), rng.normal()}});
  }
  const SphereRule rule = build_sphere_rule(3, 40);
  const Complex zeta(0.2, 0.35);
  const auto theta = rng.unit_vector(3);
  const Complex alpha(1.5, -0.5), beta(-0.25, 2.0);
  const Complex lhs = reproduce(alpha * a + beta * b, zeta, theta, rule, 48);
  const Complex rhs = alpha * reproduce(a, zeta, theta, rule, 48) +
                      beta * reproduce(b, zeta, theta, rule, 48);
  CHECK(std::abs(lhs - rhs) < 1e-12);
  const Complex modified =
      reproduce(a, zeta, theta, rule, 48, ReproductionRoute::modified_poisson);
  CHECK(std::abs(modified - reproduce(a, zeta, theta, rule, 48)) < 1e-9);
  CHECK(std::abs(modified - evaluate(a, zeta, theta)) < 1e-9);
}

TEST_CASE("reproduce preconditions") {
  const AlmansiTable t = AlmansiTable::basis(3, {4, 1}, 1);
  const auto theta = e(3, 2);
  CHECK_THROWS_AS(reproduce(t, 0.3, theta, build_sphere_rule(3, 6), 64), PreconditionError);
  CHECK_THROWS_AS(reproduce(t, 0.3, theta, build_sphere_rule(3, 20), 12), PreconditionError);
  CHECK_THROWS_AS(reproduce(t, 1.0, theta, build_sphere_rule(3, 20), 64), DomainError);
  const KernelPoint far{Complex(1.0, 0.0), e(3, 0), 1.0, e(3, 1)};
  CHECK_THROWS_AS(cauchy_kernel(3, far), DomainError);
}
