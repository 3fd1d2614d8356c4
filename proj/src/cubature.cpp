#include "phardy/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phardy/parallel.hpp"
#include "phardy/quadrature.hpp"

namespace phardy {

namespace {

constexpr double kNegativeTol = -1e-14;

std::vector<std::pair<double, double>> grouped(
    std::map<double, double> by_radius) {
  std::vector<std::pair<double, double>> atoms;
  for (const auto& [r, w] : by_radius) {
    if (w != 0.0) atoms.emplace_back(r, w);
  }
  return atoms;
}

void check_strict(const RadialMeasure& m, ModeIndex mode) {
  for (const auto& [r, w] : m.atoms) {
    if (w < kNegativeTol) throw PseudoPositivityViolation(mode, w);
  }
}

double effective_radius(const PseudoPositiveMeasure& mu, const NodeSet& ns) {
  const double big_b = std::max(ns.b, mu.max_radius());
  if (!(big_b < 1.0)) {
    throw DomainError("cubature bound needs nodes and atoms inside r < 1");
  }
  return big_b;
}

Complex horner(const std::vector<Complex>& c, double s) {
  Complex v{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * s + *it;
  return v;
}

}  // namespace

double RadialMeasure::moment(double p) const {
  double sum = 0.0;
  for (const auto& [r, w] : atoms) sum += w * (p == 0.0 ? 1.0 : std::pow(r, p));
  return sum;
}

double RadialMeasure::total_mass() const { return moment(0.0); }

const RadialMeasure* PseudoPositiveMeasure::component(ModeIndex mode) const {
  auto it = components.find(mode);
  return it == components.end() ? nullptr : &it->second;
}

double PseudoPositiveMeasure::max_radius() const {
  double r_max = 0.0;
  for (const auto& [mode, m] : components) {
    for (const auto& [r, w] : m.atoms) r_max = std::max(r_max, r);
  }
  return r_max;
}

PseudoPositivityViolation::PseudoPositivityViolation(ModeIndex mode,
                                                     double weight)
    : DomainError("component measure (" + std::to_string(mode.k) + ", " +
                  std::to_string(mode.l) + ") has negative weight " +
                  std::to_string(weight)),
      mode_(mode),
      weight_(weight) {}

RadialMeasure component_measure(const AtomCloud& mu, ModeIndex mode,
                                bool strict) {
  check_mode(mu.d, mode);
  if (mu.points.size() != mu.weights.size()) {
    throw DomainError("atom cloud: point and weight counts differ");
  }
  std::map<double, double> by_radius;
  std::vector<double> theta(mu.d);
  for (std::size_t i = 0; i < mu.points.size(); ++i) {
    const auto& x = mu.points[i];
    if (static_cast<int>(x.size()) != mu.d) {
      throw DomainError("atom cloud: point of wrong dimension");
    }
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    const double r = std::sqrt(r2);
    if (!(r < 1.0)) throw DomainError("atom cloud: atom outside the open ball");
    if (r == 0.0) {
      if (mode.k == 0) by_radius[0.0] += mu.weights[i] / std::sqrt(sphere_area(mu.d));
      continue;
    }
    for (int a = 0; a < mu.d; ++a) theta[a] = x[a] / r;
    by_radius[r] += mu.weights[i] * eval_harmonic(mu.d, mode, theta);
  }
  RadialMeasure out{grouped(std::move(by_radius))};
  if (strict) check_strict(out, mode);
  return out;
}

RadialMeasure component_measure(const ProductMeasure& mu, ModeIndex mode,
                                const SphereRule& rule, bool strict) {
  check_mode(mu.d, mode);
  double angular = 0.0;
  if (!mu.density) {
    angular = mode.k == 0 ? std::sqrt(sphere_area(mu.d)) : 0.0;
  } else {
    if (rule.d != mu.d) throw PreconditionError("component measure: rule dimension mismatch");
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      angular += rule.weights[i] * eval_harmonic(mu.d, mode, rule.nodes[i]) *
                 mu.density(rule.nodes[i]);
    }
  }
  RadialMeasure out;
  if (angular == 0.0) return out;
  for (const auto& [r, w] : mu.radial_atoms) {
    if (!(r >= 0.0 && r < 1.0)) {
      throw DomainError("product measure: radial atom outside [0, 1)");
    }
    if (w * angular != 0.0) out.atoms.emplace_back(r, w * angular);
  }
  if (strict) check_strict(out, mode);
  return out;
}

PseudoPositiveMeasure to_components(const AtomCloud& mu, double b, int k_max,
                                    bool strict) {
  PseudoPositiveMeasure out{mu.d, b, {}};
  for (const auto& mode : modes_up_to(mu.d, k_max)) {
    RadialMeasure m = component_measure(mu, mode, strict);
    if (!m.atoms.empty()) out.components[mode] = std::move(m);
  }
  return out;
}

PseudoPositiveMeasure to_components(const ProductMeasure& mu, double b,
                                    int k_max, const SphereRule& rule,
                                    bool strict) {
  PseudoPositiveMeasure out{mu.d, b, {}};
  for (const auto& mode : modes_up_to(mu.d, k_max)) {
    RadialMeasure m = component_measure(mu, mode, rule, strict);
    if (!m.atoms.empty()) out.components[mode] = std::move(m);
  }
  return out;
}

PseudoPositiveMeasure lebesgue_ball(int d, double b, int n_radial) {
  if (!(b > 0.0 && b <= 1.0)) throw DomainError("lebesgue_ball: b must lie in (0, 1]");
  const GaussRule g = gauss_legendre(n_radial, 0.0, b);
  const double scale = std::sqrt(sphere_area(d));
  RadialMeasure m;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    m.atoms.emplace_back(g.nodes[i],
                         scale * g.weights[i] * std::pow(g.nodes[i], d - 1));
  }
  PseudoPositiveMeasure out{d, b, {}};
  out.components[{0, 1}] = std::move(m);
  return out;
}

std::vector<double> quadrature_weights(const RadialMeasure& m,
                                       std::span<const double> nodes, int k) {
  if (nodes.empty()) throw DomainError("quadrature_weights: no nodes");
  if (k < 0) throw DomainError("quadrature_weights: k must be >= 0");
  const std::size_t n = nodes.size();
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (nodes[j] < 0.0) throw DomainError("quadrature_weights: negative node");
    if (k > 0 && nodes[j] == 0.0) {
      throw DomainError("quadrature_weights: node t = 0 with k > 0");
    }
    s[j] = nodes[j] * nodes[j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s[i] == s[j]) {
        throw DomainError("quadrature_weights: coincident squared nodes");
      }
    }
  }
  std::vector<double> lambda(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double mu = 0.0;
    for (const auto& [r, w] : m.atoms) {
      const double u = r * r;
      double lj = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) lj *= (u - s[i]) / (s[j] - s[i]);
      }
      mu += w * std::pow(r, k) * lj;
    }
    lambda[j] = mu / std::pow(nodes[j], k);
  }
  return lambda;
}

CubatureResult cubature(const AlmansiTable& f, const PseudoPositiveMeasure& mu,
                        const NodeSet& ns, int k_max) {
  if (f.dimension() != mu.d) throw DomainError("cubature: dimension mismatch");
  std::map<ModeIndex, ModeProfile> profiles;
  for (const auto& [mode, c] : f.entries()) {
    if (mode.k > k_max) continue;
    profiles[mode] = [&c](Complex s) {
      Complex v{};
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * s + *it;
      return v;
    };
  }
  CubatureResult out = cubature(mu.d, profiles, mu, ns, k_max);
  double dropped = 0.0;
  bool any = false;
  for (const auto& [mode, c] : f.entries()) {
    if (mode.k <= k_max) continue;
    const RadialMeasure* m = mu.component(mode);
    if (m == nullptr) continue;
    double norm2 = 0.0;
    for (const auto& v : c) norm2 += std::norm(v);
    dropped += std::sqrt(norm2) * m->moment(mode.k);
    any = true;
  }
  if (any) {
    const double big_b = effective_radius(mu, ns);
    out.dropped_bound = dropped / std::sqrt(1.0 - std::pow(big_b, 4));
  }
  return out;
}

CubatureResult cubature(int d, const std::map<ModeIndex, ModeProfile>& f,
                        const PseudoPositiveMeasure& mu, const NodeSet& ns,
                        int k_max) {
  if (d != mu.d) throw DomainError("cubature: dimension mismatch");
  ns.validate();
  std::vector<ModeIndex> modes;
  for (const auto& [mode, profile] : f) {
    if (mode.k <= k_max && mu.component(mode) != nullptr) modes.push_back(mode);
  }
  std::vector<Complex> parts(modes.size());
  parallel_for(modes.size(), [&](std::size_t i) {
    const ModeIndex mode = modes[i];
    const auto& nodes = ns.nodes_for(mode);
    const auto lambda = quadrature_weights(*mu.component(mode), nodes, mode.k);
    const ModeProfile& profile = f.at(mode);
    Complex sum{};
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double t = nodes[j];
      sum += lambda[j] * std::pow(t, mode.k) * profile(t * t);
    }
    parts[i] = sum;
  });
  CubatureResult out;
  for (const auto& p : parts) out.value += p;
  return out;
}

Complex integrate_table(const AlmansiTable& f, const PseudoPositiveMeasure& mu,
                        int k_max) {
  Complex sum{};
  for (const auto& [mode, c] : f.entries()) {
    if (mode.k > k_max) continue;
    const RadialMeasure* m = mu.component(mode);
    if (m == nullptr) continue;
    for (const auto& [r, w] : m->atoms) {
      sum += w * std::pow(r, mode.k) * horner(c, r * r);
    }
  }
  return sum;
}

double cubature_error_bound(const std::map<ModeIndex, double>& norms,
                            const PseudoPositiveMeasure& mu, const NodeSet& ns,
                            int k_max) {
  const int n = ns.order();
  if (n < 0) throw PreconditionError("cubature bound: empty node set");
  const double big_b = effective_radius(mu, ns);
  const double kept_factor = std::pow(2.0, n + 1) / std::pow(1.0 - big_b, n + 2);
  const double dropped_factor = 1.0 / std::sqrt(1.0 - std::pow(big_b, 4));
  double sum = 0.0;
  for (const auto& [mode, norm] : norms) {
    const RadialMeasure* m = mu.component(mode);
    if (m == nullptr || norm == 0.0) continue;
    double first = 0.0;
    for (const auto& [r, w] : m->atoms) first += std::abs(w) * std::pow(r, mode.k);
    sum += norm * first * (mode.k <= k_max ? kept_factor : dropped_factor);
  }
  return sum;
}

PseudoPositivityReport pseudo_positivity_report(const PseudoPositiveMeasure& mu,
                                                int k_max) {
  PseudoPositivityReport report;
  for (const auto& [mode, m] : mu.components) {
    if (mode.k > k_max) continue;
    for (const auto& [r, w] : m.atoms) {
      if (w < kNegativeTol) {
        report.violations.push_back(mode);
        report.passed = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace phardy
