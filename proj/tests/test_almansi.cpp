#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "phardy/almansi.hpp"
#include "phardy/errors.hpp"
#include "phardy/random.hpp"

using namespace phardy;

namespace {

MultiPoly random_poly(Rng& rng, int d, int degree, int terms) {
  MultiPoly p(d);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> alpha(d, 0);
    int left = rng.integer(0, degree);
    for (int a = 0; a < d && left > 0; ++a) {
      const int e = a == d - 1 ? left : rng.integer(0, left);
      alpha[a] = e;
      left -= e;
    }
    p.add_term(alpha, {rng.normal(), rng.normal()});
  }
  return p;
}

// f(x) for x in the real ball.
Complex at_point(const AlmansiTable& t, const std::vector<double>& x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double r = std::sqrt(r2);
  std::vector<double> theta(x.size(), 0.0);
  if (r == 0.0) {
    theta[0] = 1.0;
  } else {
    for (std::size_t a = 0; a < x.size(); ++a) theta[a] = x[a] / r;
  }
  return evaluate(t, r, theta);
}

// Finite-difference Laplacian applied `times` times (standard 2d+1 stencil).
Complex fd_laplacian(const std::function<Complex(const std::vector<double>&)>& f,
                     std::vector<double> x, double h, int times) {
  if (times == 0) return f(x);
  Complex sum = -2.0 * static_cast<double>(x.size()) * fd_laplacian(f, x, h, times - 1);
  for (std::size_t a = 0; a < x.size(); ++a) {
    const double saved = x[a];
    x[a] = saved + h;
    sum += fd_laplacian(f, x, h, times - 1);
    x[a] = saved - h;
    sum += fd_laplacian(f, x, h, times - 1);
    x[a] = saved;
  }
  return sum / (h * h);
}

}  // namespace

TEST_CASE("gauss_decompose closed forms") {
  for (int d : {2, 3}) {
    MultiPoly one(d);
    one.add_term(std::vector<int>(d, 0), 1.0);
    const AlmansiTable t = gauss_decompose(one);
    REQUIRE(t.entries().size() == 1);
    CHECK(std::abs(t.coefficient({0, 1}, 0) - std::sqrt(sphere_area(d))) < 1e-13);
  }
  MultiPoly r2(2);
  r2.add_term({2, 0}, 1.0);
  r2.add_term({0, 2}, 1.0);
  const AlmansiTable t = gauss_decompose(r2);
  REQUIRE(t.entries().size() == 1);
  CHECK(std::abs(t.coefficient({0, 1}, 0)) < 1e-13);
  CHECK(std::abs(t.coefficient({0, 1}, 1) - std::sqrt(2 * std::numbers::pi)) < 1e-13);

  MultiPoly xy(2);
  xy.add_term({1, 1}, 1.0);
  const AlmansiTable s = gauss_decompose(xy);
  REQUIRE(s.entries().size() == 1);
  CHECK(std::abs(s.coefficient({2, 2}, 0) - std::sqrt(std::numbers::pi) / 2) < 1e-13);
}

TEST_CASE("gauss_decompose roundtrip and degree structure") {
  Rng rng(3);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 6; ++trial) {
      const MultiPoly p = random_poly(rng, d, 8, 15);
      const AlmansiTable t = gauss_decompose(p);
      double scale = 0.0;
      for (const auto& [alpha, c] : p.terms()) scale += std::abs(c);
      for (int s = 0; s < 100; ++s) {
        const auto theta = rng.unit_vector(d);
        const double r = rng.uniform();
        std::vector<double> x(d);
        for (int a = 0; a < d; ++a) x[a] = r * theta[a];
        CHECK(std::abs(p(x) - evaluate(t, r, theta)) < 1e-10 * scale);
      }
      for (const auto& [mode, c] : t.entries()) {
        CHECK(mode.k + 2 * (static_cast<int>(c.size()) - 1) <= p.degree());
      }
      CHECK(decomposition_residual(p, t) < 1e-10 * scale);
    }
  }
  MultiPoly big(2);
  big.add_term({kMaxGaussDegree + 1, 0}, 1.0);
  CHECK_THROWS_AS(gauss_decompose(big), ResourceError);
}

TEST_CASE("decompose_samples") {
  const SphereRule rule = build_sphere_rule(3, 8);
  const std::vector<double> radii{0.0, 0.3, 0.7};
  const Sampler b21 = [](double r, std::span<const double> theta) -> Complex {
    return r * r * eval_harmonic(3, {2, 1}, theta);
  };
  const auto coeffs = decompose_samples(b21, 3, 4, radii, rule);
  for (const auto& [mode, v] : coeffs) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double expect = mode == ModeIndex{2, 1} ? radii[i] * radii[i] : 0.0;
      CHECK(std::abs(v[i] - expect) < 1e-12);
    }
  }
  const Sampler one = [](double, std::span<const double>) -> Complex { return 1.0; };
  const auto c1 = decompose_samples(one, 3, 2, radii, rule);
  CHECK(std::abs(c1.at({0, 1})[1] - std::sqrt(4 * std::numbers::pi)) < 1e-12);

  const Sampler two = [](double r, std::span<const double> theta) -> Complex {
    return r * eval_harmonic(3, {1, 2}, theta) +
           Complex(0, 2) * std::pow(r, 3) * eval_harmonic(3, {3, 5}, theta);
  };
  int nonzero = 0;
  for (const auto& [mode, v] : decompose_samples(two, 3, 4, radii, rule)) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    if (m > 1e-12) ++nonzero;
  }
  CHECK(nonzero == 2);
  CHECK_THROWS_AS(decompose_samples(one, 3, 5, radii, rule), PreconditionError);
}

TEST_CASE("evaluation of basis elements and parity") {
  Rng rng(9);
  for (int d : {2, 3}) {
    const auto theta = rng.unit_vector(d);
    const Complex z(0.3, -0.4);
    const AlmansiTable b = AlmansiTable::basis(d, {3, 2}, 0);
    CHECK(std::abs(evaluate(b, z, theta) - std::pow(z, 3) * eval_harmonic(d, {3, 2}, theta)) < 1e-15);
    const AlmansiTable t = gauss_decompose(random_poly(rng, d, 7, 12));
    for (int s = 0; s < 50; ++s) {
      const auto th = rng.unit_vector(d);
      std::vector<double> minus(th);
      for (auto& v : minus) v = -v;
      const Complex w(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
      CHECK(std::abs(evaluate(t, -w, minus) - evaluate(t, w, th)) < 1e-13);
    }
    CHECK_THROWS_AS(evaluate(t, Complex(1.0, 0.0), theta), DomainError);
  }
}

TEST_CASE("finite-difference polyharmonicity") {
  // d = 2: Delta(r^{k+2s} Y) = 4 s (k+s) r^{k+2s-2} Y.
  for (int d : {2, 3}) {
    AlmansiTable t(d);
    t.set({4, 1}, {Complex(0.7, 0.1), Complex(-0.4, 0.2)});
    t.set({1, 1}, {Complex(0.3, 0.0), Complex(0.5, -0.5)});
    const auto f = [&](const std::vector<double>& x) { return at_point(t, x); };
    std::vector<double> x(d, 0.0);
    x[0] = 0.31;
    x[1] = -0.22;
    const Complex v1 = fd_laplacian(f, x, 0.04, 2);
    const Complex v2 = fd_laplacian(f, x, 0.02, 2);
    const double e1 = std::abs(v1);
    const double e2 = std::abs(v2);
    CAPTURE(e1);
    CAPTURE(e2);
    CHECK(e1 / e2 > 3.0);
    CHECK(e1 / e2 < 5.0);
    // Richardson extrapolation removes the h^2 term.
    CHECK(std::abs(4.0 * v2 - v1) / 3.0 < 0.05 * e2);

    // One more radial power breaks biharmonicity with a known value.
    AlmansiTable u(d);
    u.set({0, 1}, {0.0, 0.0, 1.0});
    const auto g = [&](const std::vector<double>& y) { return at_point(u, y); };
    // Delta^2 (r^4 Y_0) = 16 * 2 (d/2 + 1) * (d/2) / sqrt(omega_d).
    const double expect = 4.0 * 2 * (0.5 * d + 1) * 4.0 * 1 * (0.5 * d) /
                          std::sqrt(sphere_area(d));
    CHECK(std::abs(fd_laplacian(g, x, 0.05, 2) - expect) < 1e-6 * expect);
  }
}

TEST_CASE("series evaluation with certified tail") {
  const double a = 2.5;
  const int stored = 8;
  AlmansiSeries series;
  series.d = 3;
  series.coefficients = [&](ModeIndex mode) {
    std::vector<Complex> c;
    if (mode == ModeIndex{0, 1}) {
      for (int j = 0; j < stored; ++j) c.push_back(std::pow(a, -j));
    }
    return c;
  };
  series.tail_norm = [&](int) {
    return std::pow(a, -stored) / std::sqrt(1.0 - 1.0 / (a * a));
  };
  Rng rng(2);
  for (int s = 0; s < 20; ++s) {
    const Complex z = std::polar(rng.uniform(0.0, 0.95), rng.uniform(0.0, 6.28));
    const auto theta = rng.unit_vector(3);
    const Complex truth = eval_harmonic(3, {0, 1}, theta) / (1.0 - z * z / a);
    const SeriesValue v = evaluate(series, 4, z, theta);
    CHECK(std::abs(truth - v.value) <= v.tail_bound);
  }
  CHECK(evaluation_kernel_norm2(2, 0.0) == doctest::Approx(1.0 / (2 * std::numbers::pi)));
}

TEST_CASE("table arithmetic") {
  AlmansiTable a(2), b(2);
  a.set({1, 2}, {1.0, 2.0});
  b.set({1, 2}, {0.5});
  b.set({0, 1}, {0.0, 0.0, 3.0});
  const AlmansiTable c = a + b;
  CHECK(c.coefficient({1, 2}, 0) == Complex(1.5));
  CHECK(c.coefficient({0, 1}, 2) == Complex(3.0));
  CHECK(c.max_k() == 1);
  CHECK(c.max_j() == 2);
  CHECK(c.max_frequency() == 4);
  CHECK_THROWS_AS(a.set({1, 3}, {1.0}), DomainError);
  CHECK_THROWS_AS(a += AlmansiTable(3), DomainError);
}
