#include <doctest.h>

#include <cmath>
#include <vector>

#include "phardy/bvp.hpp"
#include "phardy/errors.hpp"
#include "phardy/random.hpp"
#include "phardy/sphere.hpp"

using namespace phardy;

namespace {

// Radial part of Delta acting on p(r) Y_k with p a polynomial in r:
// p'' + (d-1)/r p' - k(k+d-2)/r^2 p, coefficients indexed by the power of r.
std::vector<Rational> radial_laplacian(int d, int k, const std::vector<Rational>& p) {
  std::vector<Rational> out(p.size(), Rational(0));
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (p[n] == 0) continue;
    const Rational nn(static_cast<long>(n));
    const Rational c = nn * (nn - 1) + Rational(d - 1) * nn - Rational(k * (k + d - 2));
    if (c == 0) continue;
    REQUIRE(n >= 2);
    out[n - 2] += c * p[n];
  }
  return out;
}

std::vector<Rational> ladder_to_powers(int k, const std::vector<Rational>& q) {
  std::vector<Rational> p(k + 2 * q.size() + 1, Rational(0));
  for (std::size_t s = 0; s < q.size(); ++s) p[k + 2 * s] = q[s];
  return p;
}

Rational value_at_one(const std::vector<Rational>& p) {
  Rational sum(0);
  for (const auto& c : p) sum += c;
  return sum;
}

// Laplacian of u(x) = f(|x|, x/|x|) by central differences.
Complex fd_laplacian(const AlmansiTable& t, std::vector<double> x, double h) {
  auto u = [&](const std::vector<double>& y) {
    double r = 0;
    for (double v : y) r += v * v;
    r = std::sqrt(r);
    std::vector<double> theta(y);
    for (auto& v : theta) v /= r;
    return evaluate_unchecked(t, r, theta);
  };
  const Complex centre = u(x);
  Complex sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto plus = x, minus = x;
    plus[i] += h;
    minus[i] -= h;
    sum += u(plus) - 2.0 * centre + u(minus);
  }
  return sum / (h * h);
}

}  // namespace

TEST_CASE("apply_Lk against the radial Laplacian") {
  std::vector<double> one{1.0};
  CHECK(apply_Lk(3, 4, one).empty());
  CHECK(apply_Lk(2, 0, std::vector<double>{0.0, 1.0}) == std::vector<double>{4.0});

  Rng rng(5);
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k <= 8; ++k) {
      for (int s = 1; s <= 8; ++s) {
        std::vector<Rational> q(s + 1);
        std::vector<double> qd(s + 1);
        for (int i = 0; i <= s; ++i) {
          const int num = rng.integer(-9, 9);
          q[i] = Rational(num, i + 1);
          qd[i] = static_cast<double>(num) / (i + 1);
        }
        const auto exact = apply_Lk_exact(d, k, q);
        auto oracle = radial_laplacian(d, k, ladder_to_powers(k, q));
        REQUIRE(exact.size() == q.size() - 1);
        for (std::size_t i = 0; i < exact.size(); ++i) {
          CHECK(exact[i] == oracle[k + 2 * i]);
        }
        const auto approx = apply_Lk(d, k, qd);
        for (std::size_t i = 0; i < exact.size(); ++i) {
          const double e = exact[i].convert_to<double>();
          CHECK(std::abs(approx[i] - e) <= 1e-14 * std::max(1.0, std::abs(e)));
        }
      }
    }
  }
}

TEST_CASE("gamma values") {
  CHECK(gamma(3, 2, 1, 2) == doctest::Approx(36.0).epsilon(1e-15));
  CHECK(gamma_exact(3, 2, 1, 2) == Rational(36));
  CHECK(gamma(2, 0, 1, 1) == 4.0);
  for (int d = 2; d <= 6; ++d) {
    for (int k = 0; k <= 30; ++k) {
      for (int m = 0; m <= 6; ++m) {
        for (int s = 0; s <= 6; ++s) {
          const Rational g = gamma_exact(d, k, m, s);
          if (m == 0) CHECK(g == 1);
          if (s < m) CHECK(g == 0);
          if (s >= m) CHECK(g > 0);
          if (d <= 5 && k <= 4 && s <= 4) {
            // L^m by repeated radial Laplacian of r^{k+2s}, evaluated at 1.
            std::vector<Rational> q(s + 1, Rational(0));
            q[s] = 1;
            auto p = ladder_to_powers(k, q);
            for (int i = 0; i < m && i < s + 1; ++i) p = radial_laplacian(d, k, p);
            if (m <= s) CHECK(value_at_one(p) == g);
          }
          const double gd = gamma(d, k, m, s);
          CHECK(std::abs(gd - g.convert_to<double>()) <= 1e-14 * std::max(1.0, gd));
        }
      }
    }
  }
}

TEST_CASE("U_k structure") {
  const auto u1 = build_Uk(3, 5, 1);
  CHECK(u1.entries == std::vector<std::vector<double>>{{1.0}});
  const auto u2 = build_Uk(2, 0, 2);
  CHECK(u2.entries == std::vector<std::vector<double>>{{1.0, 1.0}, {0.0, 4.0}});
  for (int d : {2, 3, 7}) {
    for (int k = 0; k <= 50; ++k) {
      for (int N = 1; N <= 8; ++N) {
        const auto u = build_Uk(d, k, N);
        for (int m = 0; m < N; ++m) {
          CHECK(u.entries[m][m] > 0);
          for (int j = 0; j < m; ++j) CHECK(u.entries[m][j] == 0);
        }
      }
    }
  }
}

TEST_CASE("scaled U_k is conditioned uniformly in k") {
  for (int d : {2, 3, 5}) {
    const auto a = build_Uk_scaled(d, 1000, 2);
    const auto b = build_Uk_scaled(d, 10000, 2);
    for (int m = 0; m < 2; ++m) {
      for (int j = 0; j < 2; ++j) CHECK(std::abs(a.entries[m][j] - b.entries[m][j]) < 1e-3);
    }
    for (int N = 1; N <= 5; ++N) {
      const auto lo = build_Uk_scaled(d, 1000, N);
      const auto hi = build_Uk_scaled(d, 10000, N);
      for (int m = 0; m < N; ++m) {
        for (int j = m; j < N; ++j) {
          double limit = std::pow(4.0, m);
          for (int i = 0; i < m; ++i) limit *= j - i;
          const double e_lo = std::abs(lo.entries[m][j] - limit);
          const double e_hi = std::abs(hi.entries[m][j] - limit);
          CHECK(e_lo <= 1e-3 * limit * N * N);
          CHECK(e_hi <= 0.11 * e_lo + 1e-12 * limit);
        }
      }
    }
  }
}

TEST_CASE("forward boundary map") {
  AlmansiTable harmonic(3);
  harmonic.set({2, 3}, {Complex(1.5, -0.5)});
  const auto gh = forward_boundary(harmonic, 3);
  CHECK(gh.value(0, {2, 3}) == Complex(1.5, -0.5));
  CHECK(gh.value(1, {2, 3}) == Complex(0.0));
  CHECK(gh.value(2, {2, 3}) == Complex(0.0));

  AlmansiTable r2(2);
  r2.set({0, 1}, {0.0, 1.0});
  const auto g = forward_boundary(r2, 2);
  CHECK(g.value(0, {0, 1}) == Complex(1.0));
  CHECK(g.value(1, {0, 1}) == Complex(4.0));

  Rng rng(41);
  for (int d : {2, 3}) {
    AlmansiTable t(d);
    t.set({0, 1}, {0.3, -0.7});
    t.set({1, 1}, {1.0, 0.5});
    t.set({2, 2}, {0.0, Complex(0.2, 0.4)});
    const auto b = forward_boundary(t, 2);
    for (int trial = 0; trial < 4; ++trial) {
      const auto theta = rng.unit_vector(d);
      const Complex lap = fd_laplacian(t, theta, 1e-3);
      Complex projected = 0;
      for (const auto& mode : b.support()) {
        projected += b.value(1, mode) * eval_harmonic(d, mode, theta);
      }
      CHECK(std::abs(lap - projected) < 1e-4);
    }
  }

  AlmansiTable a(3), c(3);
  a.set({1, 2}, {1.0, 2.0, 3.0});
  c.set({1, 2}, {-1.0, 0.5});
  c.set({0, 1}, {0.0, 0.0, 1.0});
  const auto sum = forward_boundary(2.0 * a + c, 3);
  const auto fa = forward_boundary(a, 3), fc = forward_boundary(c, 3);
  for (int m = 0; m < 3; ++m) {
    for (const auto& mode : sum.support()) {
      CHECK(std::abs(sum.value(m, mode) - 2.0 * fa.value(m, mode) - fc.value(m, mode)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(forward_boundary(a, 2), PreconditionError);
}

TEST_CASE("Dirichlet solve inverts the forward map") {
  Rng rng(43);
  for (int d : {2, 3, 4}) {
    for (int N = 1; N <= 6; ++N) {
      AlmansiTable t(d);
      for (int trial = 0; trial < 10; ++trial) {
        const int k = rng.integer(0, 20);
        const ModeIndex mode{k, rng.integer(1, static_cast<int>(harmonic_dimension(d, k)))};
        std::vector<Complex> c(N);
        for (auto& v : c) v = Complex(rng.normal(), rng.normal());
        t.set(mode, c);
      }
      const AlmansiTable back = solve_dirichlet(forward_boundary(t, N));
      for (const auto& [mode, coeffs] : t.entries()) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
          CHECK(std::abs(back.coefficient(mode, static_cast<int>(j)) - coeffs[j]) <
                1e-11 * std::max(1.0, std::abs(coeffs[j])));
        }
      }
    }
  }
  BoundaryData one{3, 1, {{{{0, 1}, 2.0}, {{3, 4}, Complex(0, 1)}}}};
  const auto u = solve_dirichlet(one);
  CHECK(u.coefficient({0, 1}, 0) == Complex(2.0));
  CHECK(u.coefficient({3, 4}, 0) == Complex(0, 1));
  CHECK(u.max_j() == 0);
}

TEST_CASE("Sobolev diagnostic") {
  const int d = 2, N = 3, K = 400;
  auto make = [&](double eps) {
    BoundaryData data{d, N, std::vector<std::map<ModeIndex, Complex>>(N)};
    for (int k = 1; k <= K; ++k) {
      for (int m = 0; m < N; ++m) data.g[m][{k, 1}] = std::pow(k, m - 0.5 - eps);
    }
    return data;
  };
  for (double eps : {0.25, -0.5}) {
    const auto data = make(eps);
    const auto diag = sobolev_diagnostic(data);
    REQUIRE(diag.totals.size() == N);
    for (int m = 0; m < N; ++m) {
      double sum = 0;
      for (int k = 1; k <= K; ++k) {
        sum += std::pow(1.0 + k * k, -m) * std::norm(data.value(m, {k, 1}));
      }
      CHECK(diag.totals[m] == doctest::Approx(sum).epsilon(1e-12));
      const auto& ps = diag.partial_sums[m];
      REQUIRE(ps.size() == K + 1);
      CHECK(ps.back() == doctest::Approx(diag.totals[m]).epsilon(1e-12));
      for (int k = 1; k <= K; ++k) CHECK(ps[k] >= ps[k - 1]);
      const double tail = ps[K] - ps[K / 2];
      if (eps > 0) {
        CHECK(tail < 0.2 * ps[K]);
      } else {
        CHECK(tail > 0.4 * ps[K]);
      }
    }
  }
  BoundaryData energy{3, 1, {{{{0, 1}, 3.0}, {{1, 2}, Complex(0, 4)}}}};
  CHECK(sobolev_diagnostic(energy).totals[0] == doctest::Approx(25.0));
}
