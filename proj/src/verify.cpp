#include "phardy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "phardy/almansi.hpp"
#include "phardy/bvp.hpp"
#include "phardy/cubature.hpp"
#include "phardy/hardy.hpp"
#include "phardy/interp.hpp"
#include "phardy/kernels.hpp"
#include "phardy/quadrature.hpp"
#include "phardy/random.hpp"
#include "phardy/sphere.hpp"

namespace phardy::verify {

namespace {

std::string fmt(const char* pattern, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

CheckResult start(int criterion, std::string name) {
  CheckResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  return r;
}

Complex random_complex(Rng& rng) { return {rng.normal(), rng.normal()}; }

// Point uniformly distributed in the closed disc of radius rho.
Complex random_in_disc(Rng& rng, double rho) {
  return std::polar(rho * std::sqrt(rng.uniform()),
                    2.0 * std::numbers::pi * rng.uniform());
}

ModeIndex random_mode(Rng& rng, int d, int k_lo, int k_hi) {
  const int k = rng.integer(k_lo, k_hi);
  const auto a_k = harmonic_dimension(d, k);
  return {k, rng.integer(1, static_cast<int>(a_k))};
}

// Random table with every mode k <= k_max present and k + 2j <= degree.
AlmansiTable random_table(Rng& rng, int d, int k_max, int degree) {
  AlmansiTable t(d);
  for (const auto& mode : modes_up_to(d, std::min(k_max, degree))) {
    const int n = (degree - mode.k) / 2 + 1;
    std::vector<Complex> c(n);
    for (auto& v : c) v = random_complex(rng);
    t.set(mode, std::move(c));
  }
  return t;
}

// Laurent polynomials sum_e c_e r^e with exact coefficients: the
// differentiation oracle for L_(k).
using Laurent = std::map<int, Rational>;

Laurent shift(const Laurent& p, int e) {
  Laurent out;
  for (const auto& [exp, c] : p) out[exp + e] = c;
  return out;
}

Laurent derivative(const Laurent& p) {
  Laurent out;
  for (const auto& [exp, c] : p) {
    if (exp != 0) out[exp - 1] += c * exp;
  }
  return out;
}

// r^{-(d+k-1)} d/dr [ r^{d+2k-1} d/dr ( r^{-k} p ) ].
Laurent radial_operator(int d, int k, const Laurent& p) {
  Laurent q = derivative(shift(p, -k));
  q = derivative(shift(q, d + 2 * k - 1));
  return shift(q, -(d + k - 1));
}

Rational at_one(const Laurent& p) {
  Rational sum = 0;
  for (const auto& [exp, c] : p) sum += c;
  return sum;
}

}  // namespace

CheckResult sphere_orthonormality(std::uint64_t seed) {
  auto r = start(1, "sphere orthonormality and addition theorem");
  r.tolerance = 1e-10;
  constexpr double zonal_tol = 1e-12;
  constexpr int k_max = 15;
  Rng rng(seed);
  double gram_dev = 0.0;
  double zonal_dev = 0.0;
  for (int d : {2, 3}) {
    const SphereRule rule = build_sphere_rule(d, 2 * k_max);
    std::vector<std::vector<double>> values;
    for (const auto& x : rule.nodes) {
      std::vector<double> flat;
      for (const auto& deg : eval_harmonics_up_to(d, k_max, x)) {
        flat.insert(flat.end(), deg.begin(), deg.end());
      }
      values.push_back(std::move(flat));
    }
    const std::size_t n = values.front().size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        double g = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
          g += rule.weights[i] * values[i][a] * values[i][b];
        }
        gram_dev = std::max(gram_dev, std::abs(g - (a == b ? 1.0 : 0.0)));
      }
    }
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = rng.unit_vector(d);
      const auto y = rng.unit_vector(d);
      const auto hx = eval_harmonics_up_to(d, k_max, x);
      const auto hy = eval_harmonics_up_to(d, k_max, y);
      const double c = cosine_between(x, y);
      for (int k = 0; k <= k_max; ++k) {
        double sum = 0.0;
        for (std::size_t l = 0; l < hx[k].size(); ++l) sum += hx[k][l] * hy[k][l];
        zonal_dev = std::max(zonal_dev, std::abs(sum - eval_zonal(d, k, c)));
      }
    }
  }
  r.measured = gram_dev;
  r.passed = gram_dev < r.tolerance && zonal_dev < zonal_tol;
  r.detail = "d in {2,3}, k <= 15; zonal max " + fmt("%.3g", zonal_dev) +
             " (tol 1e-12)";
  return r;
}

CheckResult boundary_gram(std::uint64_t /*seed*/) {
  auto r = start(2, "Almansi basis orthonormality on the quadric boundary");
  r.tolerance = 1e-9;
  constexpr int k_max = 8;
  constexpr int j_max = 4;
  constexpr int n_phi = 48;
  const int f_max = k_max + 2 * j_max;
  // The boundary quadrature is a product rule, so the Gram matrix factors
  // into a circle part (frequencies) and a sphere part (harmonics).
  std::vector<std::vector<Complex>> circle(f_max + 1,
                                           std::vector<Complex>(f_max + 1));
  for (int f = 0; f <= f_max; ++f) {
    for (int g = 0; g <= f_max; ++g) {
      Complex sum{};
      for (int p = 0; p < n_phi; ++p) {
        const double phi = 2.0 * std::numbers::pi * p / n_phi;
        sum += std::polar(1.0, (f - g) * phi);
      }
      circle[f][g] = sum / static_cast<double>(n_phi);
    }
  }
  double dev = 0.0;
  for (int d : {2, 3}) {
    const SphereRule rule = build_sphere_rule(d, 2 * k_max);
    const auto modes = modes_up_to(d, k_max);
    std::vector<std::vector<double>> values;
    for (const auto& x : rule.nodes) {
      std::vector<double> flat;
      for (const auto& deg : eval_harmonics_up_to(d, k_max, x)) {
        flat.insert(flat.end(), deg.begin(), deg.end());
      }
      values.push_back(std::move(flat));
    }
    const std::size_t n = modes.size();
    std::vector<std::vector<double>> sphere(n, std::vector<double>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
          s += rule.weights[i] * values[i][a] * values[i][b];
        }
        sphere[a][b] = s;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (int j = 0; j <= j_max; ++j) {
        for (std::size_t b = 0; b < n; ++b) {
          for (int jj = 0; jj <= j_max; ++jj) {
            const Complex g = circle[modes[a].k + 2 * j][modes[b].k + 2 * jj] *
                              sphere[a][b];
            const double target = (a == b && j == jj) ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(g - target));
          }
        }
      }
    }
  }
  r.measured = dev;
  r.passed = dev < r.tolerance;
  r.detail = "d in {2,3}, k <= 8, j <= 4, product rule with 48 circle nodes";
  return r;
}

CheckResult kernel_duality(std::uint64_t seed) {
  auto r = start(3, "kernel closed forms against truncated series");
  r.tolerance = 1e-8;
  constexpr int k_max = 90;
  constexpr int j_max = 45;
  Rng rng(seed);
  double cauchy = 0.0;
  double poisson = 0.0;
  double hua = 0.0;
  for (int d : {2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Complex w = random_in_disc(rng, 0.6);
      const auto theta = rng.unit_vector(d);
      const auto theta_prime = rng.unit_vector(d);
      const double c = cosine_between(theta, theta_prime);
      const Complex z = std::polar(rng.uniform(0.7, 1.3),
                                   2.0 * std::numbers::pi * rng.uniform());
      const KernelPoint pc{w / z, theta_prime, z, theta};
      cauchy = std::max(cauchy, std::abs(cauchy_kernel(d, pc) -
                                         cauchy_kernel_series(d, pc, k_max, j_max)));
      poisson = std::max(poisson, std::abs(poisson_kernel_c(d, w, c) -
                                           poisson_kernel_series(d, w, c, k_max)));
      const KernelPoint ph{w * z, theta_prime, z, theta};
      hua = std::max(hua, std::abs(hua_aronszajn_kernel(d, ph) -
                                   hua_aronszajn_series(d, ph, k_max, j_max)));
    }
  }
  r.measured = std::max({cauchy, poisson, hua});
  r.passed = r.measured < r.tolerance;
  r.detail = "d in {2,3,4}, 100 points each, |w| <= 0.6; cauchy " +
             fmt("%.3g", cauchy) + ", poisson " + fmt("%.3g", poisson) +
             ", hua-aronszajn " + fmt("%.3g", hua);
  return r;
}

CheckResult reproducing_property(std::uint64_t seed) {
  auto r = start(4, "reproducing property at |zeta| = 0.5");
  r.tolerance = 1e-7;
  constexpr int degree = 6;
  constexpr int rule_degree = 44;
  constexpr int n_phi = 64;
  Rng rng(seed);
  double worst = 0.0;
  int cases = 0;
  for (int d : {2, 3}) {
    const SphereRule rule = build_sphere_rule(d, rule_degree);
    for (int trial = 0; trial < 5; ++trial) {
      MultiPoly p(d);
      std::vector<int> alpha(d, 0);
      // Every monomial of total degree <= 6.
      std::function<void(int, int)> fill = [&](int axis, int left) {
        if (axis == d - 1) {
          for (int e = 0; e <= left; ++e) {
            alpha[axis] = e;
            p.add_term(alpha, random_complex(rng));
          }
          return;
        }
        for (int e = 0; e <= left; ++e) {
          alpha[axis] = e;
          fill(axis + 1, left - e);
        }
      };
      fill(0, degree);
      const AlmansiTable table = gauss_decompose(p);
      for (int point = 0; point < 3; ++point) {
        const Complex zeta = std::polar(0.5, 2.0 * std::numbers::pi * rng.uniform());
        const auto theta = rng.unit_vector(d);
        const Complex truth = evaluate(table, zeta, theta);
        for (auto route : {ReproductionRoute::cauchy,
                           ReproductionRoute::modified_poisson}) {
          const Complex got = reproduce(table, zeta, theta, rule, n_phi, route);
          worst = std::max(worst, std::abs(got - truth));
          ++cases;
        }
      }
    }
  }
  r.measured = worst;
  r.passed = worst < r.tolerance;
  r.detail = std::to_string(cases) +
             " reproductions, d in {2,3}, degree 6, Cauchy and modified "
             "Poisson routes, sphere rule degree 44, 64 circle nodes";
  return r;
}

CheckResult gamma_oracle(std::uint64_t /*seed*/) {
  auto r = start(5, "gamma against symbolic L_(k)");
  r.tolerance = 0.0;
  int identities = 0;
  int mismatches = 0;
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k <= 8; ++k) {
      for (int s = 0; s <= 8; ++s) {
        Laurent p{{k + 2 * s, Rational(1)}};
        std::vector<Rational> ladder(s + 1, Rational(0));
        ladder[s] = 1;
        for (int m = 0; m <= 8; ++m) {
          const Rational expected = gamma_exact(d, k, m, s);
          // Evaluating the ladder at r = 1 sums its coefficients.
          Rational ladder_sum = 0;
          for (const auto& v : ladder) ladder_sum += v;
          ++identities;
          if (at_one(p) != expected || ladder_sum != expected) ++mismatches;
          p = radial_operator(d, k, p);
          ladder = apply_Lk_exact(d, k, ladder);
        }
      }
    }
  }
  r.measured = mismatches;
  r.passed = mismatches == 0;
  r.detail = std::to_string(identities) +
             " identities, d = 2..5, k, m, s <= 8, exact rationals";
  return r;
}

CheckResult bvp_roundtrip(std::uint64_t seed) {
  auto r = start(6, "Dirichlet roundtrip forward_boundary then solve");
  r.tolerance = 1e-11;
  Rng rng(seed);
  double worst = 0.0;
  int modes_checked = 0;
  for (int d = 2; d <= 5; ++d) {
    for (int N = 1; N <= 5; ++N) {
      AlmansiTable u(d);
      for (int i = 0; i < 40; ++i) {
        const ModeIndex mode = i == 0 ? ModeIndex{20, 1} : random_mode(rng, d, 0, 20);
        std::vector<Complex> c(N);
        for (auto& v : c) v = random_complex(rng);
        u.set(mode, std::move(c));
      }
      const AlmansiTable back = solve_dirichlet(forward_boundary(u, N));
      for (const auto& [mode, c] : u.entries()) {
        double diff = 0.0;
        double norm = 0.0;
        for (int j = 0; j < N; ++j) {
          diff += std::norm(back.coefficient(mode, j) - c[j]);
          norm += std::norm(c[j]);
        }
        worst = std::max(worst, std::sqrt(diff / norm));
        ++modes_checked;
      }
      if (back.entries().size() != u.entries().size()) worst = INFINITY;
    }
  }
  r.measured = worst;
  r.passed = worst < r.tolerance;
  r.detail = std::to_string(modes_checked) +
             " modes, d = 2..5, N = 1..5, k <= 20, relative per mode";
  return r;
}

CheckResult interpolation(std::uint64_t seed) {
  auto r = start(7, "interpolation exactness and error bound");
  r.tolerance = 1e-11;
  Rng rng(seed);
  double exact_dev = 0.0;
  for (int d : {2, 3}) {
    for (int N = 0; N <= 4; ++N) {
      NodeSet ns;
      ns.b = 0.8;
      for (int j = 0; j <= N; ++j) ns.shared.push_back(0.8 * ((j + 1.0) / (N + 1)));
      AlmansiTable f(d);
      for (int i = 0; i < 12; ++i) {
        const ModeIndex mode = random_mode(rng, d, 0, 6);
        std::vector<Complex> c(rng.integer(1, N + 1));
        for (auto& v : c) v = random_complex(rng);
        f.set(mode, std::move(c));
      }
      // Per-mode nodes on one mode, random in [0, b].
      const ModeIndex special = f.entries().begin()->first;
      std::vector<double> own;
      while (static_cast<int>(own.size()) <= N) {
        const double t = rng.uniform(0.0, 0.8);
        if (std::find(own.begin(), own.end(), t) == own.end()) own.push_back(t);
      }
      ns.per_mode[special] = own;
      const auto p = polyharmonic_interpolant(f, ns, 6);
      for (const auto& [mode, c] : f.entries()) {
        for (int j = 0; j <= N; ++j) {
          exact_dev = std::max(exact_dev, std::abs(p.table.coefficient(mode, j) -
                                                   f.coefficient(mode, j)));
        }
      }
      if (p.table.max_j() > N) exact_dev = INFINITY;
    }
  }

  double worst_ratio = 0.0;
  double worst_nodal_ratio = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int d = 2 + i % 2;
    const ModeIndex mode = random_mode(rng, d, 0, 6);
    const int N = rng.integer(1, 4);
    NodeSet ns;
    ns.b = rng.uniform(0.3, 0.8);
    while (static_cast<int>(ns.shared.size()) <= N) {
      const double t = rng.uniform(0.0, ns.b);
      if (std::find(ns.shared.begin(), ns.shared.end(), t) == ns.shared.end()) {
        ns.shared.push_back(t);
      }
    }
    ModeProfile profile;
    double norm = 0.0;
    if (i % 4 < 2) {
      const double a = rng.uniform(1.2, 3.0);
      profile = [a](Complex s) { return 1.0 / (a - s); };
      norm = 1.0 / std::sqrt(a * a - 1.0);
    } else {
      const double alpha = rng.uniform(-2.0, 2.0);
      profile = [alpha](Complex s) { return std::exp(alpha * s); };
      double term = 1.0;
      double sum = 0.0;
      for (int j = 0; j < 60; ++j) {
        sum += term * term;
        term *= alpha / (j + 1);
      }
      norm = std::sqrt(sum);
    }
    const auto p = polyharmonic_interpolant(d, {{mode, profile}}, ns, 6);
    const std::map<ModeIndex, double> norms{{mode, norm}};
    const double bound = interpolation_error_bound(norms, ns, d);
    const double nodal = interpolation_error_bound_nodal(norms, ns, d, 6);
    double err = 0.0;
    for (int s = 0; s < 1000; ++s) {
      const Complex z = random_in_disc(rng, ns.b);
      const auto theta = rng.unit_vector(d);
      const Complex f = std::pow(z, mode.k) * profile(z * z) *
                        eval_harmonic(d, mode, theta);
      err = std::max(err, std::abs(f - evaluate(p.table, z, theta)));
    }
    worst_ratio = std::max(worst_ratio, err / bound);
    worst_nodal_ratio = std::max(worst_nodal_ratio, err / nodal);
  }
  r.measured = exact_dev;
  r.passed = exact_dev < r.tolerance && worst_ratio <= 1.0 &&
             worst_nodal_ratio <= 1.0;
  r.detail = "50 analytic modes: max error/bound " + fmt("%.3g", worst_ratio) +
             ", nodal variant " + fmt("%.3g", worst_nodal_ratio) +
             " (must be <= 1)";
  return r;
}

CheckResult cubature_exactness(std::uint64_t seed) {
  auto r = start(8, "cubature exactness on r^{k+2j} Y_{k,l}");
  r.tolerance = 1e-12;
  constexpr int d = 3;
  constexpr int k_max = 10;
  constexpr int N = 4;
  constexpr double volume_tol = 1e-10;
  Rng rng(seed);
  NodeSet ns;
  ns.b = 0.9;
  ns.shared = {0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<PseudoPositiveMeasure> measures{lebesgue_ball(d, 1.0, 24)};
  for (int i = 0; i < 5; ++i) {
    PseudoPositiveMeasure mu{d, 0.9, {}};
    for (const auto& mode : modes_up_to(d, k_max)) {
      RadialMeasure m;
      const int atoms = rng.integer(2, 6);
      for (int a = 0; a < atoms; ++a) {
        m.atoms.emplace_back(rng.uniform(0.05, 0.9), rng.uniform(0.0, 1.0));
      }
      mu.components[mode] = std::move(m);
    }
    measures.push_back(std::move(mu));
  }
  double worst = 0.0;
  bool positive = true;
  for (const auto& mu : measures) {
    positive = positive && pseudo_positivity_report(mu, k_max).passed;
    for (const auto& mode : modes_up_to(d, k_max)) {
      const RadialMeasure* m = mu.component(mode);
      for (int j = 0; j <= N; ++j) {
        const AlmansiTable f = AlmansiTable::basis(d, mode, j);
        const Complex got = cubature(f, mu, ns, k_max).value;
        const double moment = m == nullptr ? 0.0 : m->moment(mode.k + 2 * j);
        worst = std::max(worst, std::abs(got - moment));
      }
    }
  }
  AlmansiTable one(d);
  one.set({0, 1}, {Complex(std::sqrt(sphere_area(d)))});
  const Complex volume = cubature(one, measures.front(), ns, k_max).value;
  const double volume_err = std::abs(volume - 4.0 * std::numbers::pi / 3.0);
  r.measured = worst;
  r.passed = worst < r.tolerance && volume_err < volume_tol && positive;
  r.detail = "d = 3, k <= 10, j <= 4, Lebesgue ball + 5 random measures; "
             "|C_N(1) - 4 pi/3| = " + fmt("%.3g", volume_err) + " (tol 1e-10)";
  return r;
}

CheckResult cubature_bound(std::uint64_t seed) {
  auto r = start(9, "cubature error bound domination");
  r.tolerance = 1.0;
  Rng rng(seed);
  double worst_ratio = 0.0;
  double worst_err = 0.0;
  struct Case {
    int d;
    ModeIndex mode;
    ModeProfile profile;
    double norm;
    std::function<double(double)> density;
    double support;
    NodeSet ns;
  };
  std::vector<Case> cases;
  {
    Case c{3, {0, 1}, [](Complex s) { return 1.0 / (2.0 - s); },
           1.0 / std::sqrt(3.0),
           [](double t) { return std::sqrt(sphere_area(3)) * t * t; }, 1.0,
           NodeSet{0.9, {0.2, 0.45, 0.7, 0.9}, {}}};
    cases.push_back(std::move(c));
  }
  for (int i = 0; i < 24; ++i) {
    const int d = 2 + i % 2;
    Case c;
    c.d = d;
    c.mode = random_mode(rng, d, 0, 6);
    if (i % 4 < 2) {
      const double a = rng.uniform(1.1, 3.0);
      c.profile = [a](Complex s) { return 1.0 / (a - s); };
      c.norm = 1.0 / std::sqrt(a * a - 1.0);
    } else {
      const double alpha = rng.uniform(-3.0, 3.0);
      c.profile = [alpha](Complex s) { return std::exp(alpha * s); };
      double term = 1.0;
      double sum = 0.0;
      for (int j = 0; j < 80; ++j) {
        sum += term * term;
        term *= alpha / (j + 1);
      }
      c.norm = std::sqrt(sum);
    }
    const double shape = rng.uniform(0.0, 2.0);
    switch (i % 3) {
      case 0:
        c.density = [d](double t) { return std::pow(t, d - 1); };
        break;
      case 1:
        c.density = [d, shape](double t) { return std::pow(t, d - 1) * (1.0 + shape * t); };
        break;
      default:
        c.density = [shape](double t) { return std::exp(-shape * t); };
        break;
    }
    c.support = rng.uniform(0.5, 0.95);
    c.ns.b = c.support;
    const int N = rng.integer(2, 4);
    while (static_cast<int>(c.ns.shared.size()) <= N) {
      const double t = rng.uniform(0.05, c.support);
      if (std::find(c.ns.shared.begin(), c.ns.shared.end(), t) ==
          c.ns.shared.end()) {
        c.ns.shared.push_back(t);
      }
    }
    cases.push_back(std::move(c));
  }
  for (const auto& c : cases) {
    const GaussRule atoms = gauss_legendre(40, 0.0, c.support);
    RadialMeasure m;
    for (std::size_t i = 0; i < atoms.nodes.size(); ++i) {
      m.atoms.emplace_back(atoms.nodes[i], atoms.weights[i] * c.density(atoms.nodes[i]));
    }
    PseudoPositiveMeasure mu{c.d, c.support, {{c.mode, m}}};
    const GaussRule ref_rule = composite_gauss_legendre(1000, 10, 0.0, c.support);
    Complex reference{};
    for (std::size_t i = 0; i < ref_rule.nodes.size(); ++i) {
      const double t = ref_rule.nodes[i];
      reference += ref_rule.weights[i] * std::pow(t, c.mode.k) *
                   c.profile(t * t) * c.density(t);
    }
    const Complex value = cubature(c.d, {{c.mode, c.profile}}, mu, c.ns, 6).value;
    const double bound = cubature_error_bound({{c.mode, c.norm}}, mu, c.ns, 6);
    const double err = std::abs(reference - value);
    worst_err = std::max(worst_err, err);
    worst_ratio = std::max(worst_ratio, err / bound);
  }
  r.measured = worst_ratio;
  r.passed = worst_ratio <= r.tolerance;
  r.detail = std::to_string(cases.size()) +
             " analytic cases, 10^4-point reference; max |error| " +
             fmt("%.3g", worst_err) + "; measured is error/bound";
  return r;
}

CheckResult maximum_principle(std::uint64_t seed) {
  auto r = start(10, "maximum principle (1-q)^{-d} ||f||");
  r.tolerance = 1e-12;
  Rng rng(seed);
  double worst_excess = -INFINITY;
  double worst_ratio = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int d = 2 + i % 2;
    AlmansiTable f = random_table(rng, d, 5, 8);
    f *= Complex(1.0 / hardy_norm(f));
    for (double q : {0.3, 0.5, 0.8}) {
      const double bound = max_principle_bound(f, q);
      double sup = 0.0;
      for (int s = 0; s < 200; ++s) {
        const Complex z = s % 2 == 0
                              ? std::polar(q, 2.0 * std::numbers::pi * rng.uniform())
                              : random_in_disc(rng, q);
        sup = std::max(sup, std::abs(evaluate(f, z, rng.unit_vector(d))));
      }
      worst_excess = std::max(worst_excess, sup - bound);
      worst_ratio = std::max(worst_ratio, sup / bound);
    }
  }
  r.measured = worst_excess;
  r.passed = worst_excess <= r.tolerance;
  r.detail = "50 unit-norm tables, q in {0.3,0.5,0.8}; measured is "
             "max(sup - bound), max sup/bound " + fmt("%.3g", worst_ratio);
  return r;
}

CheckResult norm_consistency(std::uint64_t seed) {
  auto r = start(11, "Hardy norm against boundary quadrature");
  r.tolerance = 1e-8;
  constexpr double limit_tol = 0.01;
  constexpr int degree = 4;
  constexpr int n_phi = 32;
  Rng rng(seed);
  double boundary_dev = 0.0;
  double limit_dev = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 2;
    const AlmansiTable f = random_table(rng, d, degree, degree);
    const SphereRule rule = build_sphere_rule(d, 2 * degree);
    const BoundaryTable trace = boundary_trace(f);
    double boundary = 0.0;
    double inner = 0.0;
    for (int p = 0; p < n_phi; ++p) {
      const double phi = 2.0 * std::numbers::pi * p / n_phi;
      for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
        boundary += rule.weights[a] *
                    std::norm(evaluate_trace(trace, phi, rule.nodes[a]));
        inner += rule.weights[a] *
                 std::norm(evaluate(f, std::polar(0.999, phi), rule.nodes[a]));
      }
    }
    const double norm = hardy_norm(f);
    boundary_dev = std::max(
        boundary_dev, std::abs(std::sqrt(boundary / n_phi) - norm) / norm);
    limit_dev = std::max(limit_dev,
                         std::abs(std::sqrt(inner / n_phi) - norm) / norm);
  }
  r.measured = boundary_dev;
  r.passed = boundary_dev < r.tolerance && limit_dev < limit_tol;
  r.detail = "20 tables of degree <= 4, relative; r = 0.999 circle limit " +
             fmt("%.3g", limit_dev) + " (tol 1%)";
  return r;
}

namespace {

CheckResult decomposition_roundtrip(std::uint64_t seed) {
  auto r = start(0, "Gauss decomposition roundtrip");
  r.tolerance = 1e-10;
  Rng rng(seed);
  double worst = 0.0;
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 5; ++trial) {
      MultiPoly p(d);
      for (int t = 0; t < 12; ++t) {
        std::vector<int> alpha(d);
        for (auto& e : alpha) e = rng.integer(0, 3);
        p.add_term(alpha, random_complex(rng));
      }
      worst = std::max(worst, decomposition_residual(p, gauss_decompose(p), 64,
                                                     seed + trial));
    }
  }
  r.measured = worst;
  r.passed = worst < r.tolerance;
  r.detail = "random polynomials of degree <= 9 in d = 2, 3 (not an "
             "acceptance criterion)";
  return r;
}

using Check = CheckResult (*)(std::uint64_t);

const std::map<std::string, std::vector<Check>>& suites() {
  static const std::map<std::string, std::vector<Check>> table{
      {"sphere", {sphere_orthonormality}},
      {"almansi", {decomposition_roundtrip, boundary_gram}},
      {"hardy", {boundary_gram, maximum_principle, norm_consistency}},
      {"kernels", {kernel_duality, reproducing_property}},
      {"bvp", {gamma_oracle, bvp_roundtrip}},
      {"interp", {interpolation}},
      {"cubature", {cubature_exactness, cubature_bound}},
      {"all",
       {sphere_orthonormality, boundary_gram, kernel_duality,
        reproducing_property, gamma_oracle, bvp_roundtrip, interpolation,
        cubature_exactness, cubature_bound, maximum_principle,
        norm_consistency}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "sphere", "almansi", "hardy", "kernels", "bvp", "interp", "cubature", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed) {
  auto it = suites().find(suite);
  if (it == suites().end()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  std::vector<CheckResult> out;
  for (Check check : it->second) {
    try {
      out.push_back(check(seed));
    } catch (const std::exception& e) {
      // Which criterion threw is recovered from the suite position.
      CheckResult r = start(-1, "check aborted");
      r.measured = NAN;
      r.detail = e.what();
      out.push_back(r);
    }
  }
  return out;
}

std::string format(const CheckResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%s] %2d %s: measured %.3g, tolerance %.3g",
                r.passed ? "PASS" : "FAIL", r.criterion, r.name.c_str(),
                r.measured, r.tolerance);
  std::string line = buf;
  if (!r.detail.empty()) line += " (" + r.detail + ")";
  return line;
}

}  // namespace phardy::verify
