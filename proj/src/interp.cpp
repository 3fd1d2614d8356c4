#include "phardy/interp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "phardy/errors.hpp"
#include "phardy/parallel.hpp"

namespace phardy {

namespace {

std::vector<double> squares(std::span<const double> nodes) {
  std::vector<double> s(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) s[j] = nodes[j] * nodes[j];
  std::vector<double> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("interpolation nodes have duplicate squares");
  }
  return s;
}

// Coefficients of omega(s) / (s - root) by synthetic division.
std::vector<double> deflate(const std::vector<double>& omega, double root) {
  const std::size_t n = omega.size() - 1;
  std::vector<double> q(n);
  double carry = omega[n];
  for (std::size_t i = n; i-- > 0;) {
    q[i] = carry;
    carry = omega[i] + carry * root;
  }
  return q;
}

Complex horner(const std::vector<Complex>& c, Complex s) {
  Complex v{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * s + *it;
  return v;
}

}  // namespace

const std::vector<double>& NodeSet::nodes_for(ModeIndex mode) const {
  auto it = per_mode.find(mode);
  return it == per_mode.end() ? shared : it->second;
}

int NodeSet::order() const {
  if (!shared.empty()) return static_cast<int>(shared.size()) - 1;
  if (!per_mode.empty()) {
    return static_cast<int>(per_mode.begin()->second.size()) - 1;
  }
  return -1;
}

void NodeSet::validate() const {
  if (!(b >= 0.0 && b < 1.0)) throw DomainError("node set radius b must lie in [0, 1)");
  const int n = order();
  if (n < 0) throw PreconditionError("node set is empty");
  auto check = [&](const std::vector<double>& list) {
    if (static_cast<int>(list.size()) != n + 1) {
      throw PreconditionError("node lists differ in length");
    }
    for (double r : list) {
      if (!(r >= 0.0 && r <= b)) {
        throw PreconditionError("interpolation node outside [0, b]");
      }
    }
    squares(list);
  };
  if (!shared.empty()) check(shared);
  for (const auto& [mode, list] : per_mode) check(list);
}

std::vector<double> nodal_polynomial(std::span<const double> nodes) {
  const std::vector<double> s = squares(nodes);
  std::vector<double> c{1.0};
  for (double root : s) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  return c;
}

ModeInterpolant::ModeInterpolant(std::span<const double> nodes,
                                 std::span<const Complex> values)
    : s_(squares(nodes)), values_(values.begin(), values.end()) {
  if (nodes.empty()) throw DomainError("interpolation needs at least one node");
  if (nodes.size() != values.size()) {
    throw DomainError("interpolation: node and value counts differ");
  }
  const std::size_t n = s_.size();
  w_.assign(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) w_[j] /= (s_[j] - s_[i]);
    }
  }
  const std::vector<double> omega = nodal_polynomial(nodes);
  monomial_.assign(n, Complex{});
  double frob = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::vector<double> basis = deflate(omega, s_[j]);
    for (std::size_t i = 0; i < n; ++i) {
      const double lij = w_[j] * basis[i];
      monomial_[i] += lij * values_[j];
      frob += lij * lij;
    }
  }
  inv_norm_ = std::sqrt(frob);
  for (std::size_t j = 0; j < n; ++j) {
    residual_ = std::max(residual_, std::abs(horner(monomial_, s_[j]) - values_[j]));
  }
}

Complex ModeInterpolant::operator()(Complex s) const {
  Complex num{};
  Complex den{};
  for (std::size_t j = 0; j < s_.size(); ++j) {
    const Complex diff = s - s_[j];
    if (diff == Complex{}) return values_[j];
    const Complex t = w_[j] / diff;
    num += t * values_[j];
    den += t;
  }
  return num / den;
}

ModeInterpolant interpolate_mode(std::span<const Complex> values,
                                 std::span<const double> nodes) {
  return ModeInterpolant(nodes, values);
}

namespace {

double stability_factor(const std::vector<double>& nodes,
                        const ModeInterpolant& p) {
  double sum = 0.0;
  for (double r : nodes) {
    const double s = r * r;
    sum += 1.0 / (1.0 - s * s);
  }
  return p.inverse_vandermonde_norm() * std::sqrt(sum);
}

// Interpolates the reduced values of every listed mode in parallel and
// assembles the table in mode order.
InterpolationResult assemble(
    int d, const std::vector<ModeIndex>& modes, const NodeSet& ns,
    const std::function<std::vector<Complex>(ModeIndex,
                                             const std::vector<double>&)>&
        reduced_values) {
  std::vector<std::vector<Complex>> coeffs(modes.size());
  std::vector<double> stability(modes.size(), 0.0);
  std::vector<double> residual(modes.size(), 0.0);
  parallel_for(modes.size(), [&](std::size_t i) {
    const auto& nodes = ns.nodes_for(modes[i]);
    const std::vector<Complex> values = reduced_values(modes[i], nodes);
    ModeInterpolant p(nodes, values);
    coeffs[i] = p.monomial();
    stability[i] = stability_factor(nodes, p);
    residual[i] = p.residual();
  });
  InterpolationResult out{AlmansiTable(d), 0.0, 0.0};
  for (std::size_t i = 0; i < modes.size(); ++i) {
    out.stability_constant = std::max(out.stability_constant, stability[i]);
    out.max_residual = std::max(out.max_residual, residual[i]);
    out.table.set(modes[i], std::move(coeffs[i]));
  }
  return out;
}

}  // namespace

InterpolationResult polyharmonic_interpolant(const AlmansiTable& f,
                                             const NodeSet& ns, int k_max) {
  ns.validate();
  std::vector<ModeIndex> modes;
  for (const auto& [mode, c] : f.entries()) {
    if (mode.k <= k_max) modes.push_back(mode);
  }
  return assemble(f.dimension(), modes, ns,
                  [&](ModeIndex mode, const std::vector<double>& nodes) {
                    const auto& c = *f.find(mode);
                    std::vector<Complex> v;
                    for (double r : nodes) v.push_back(horner(c, r * r));
                    return v;
                  });
}

InterpolationResult polyharmonic_interpolant(
    int d, const std::map<ModeIndex, ModeProfile>& f, const NodeSet& ns,
    int k_max) {
  ns.validate();
  std::vector<ModeIndex> modes;
  for (const auto& [mode, profile] : f) {
    check_mode(d, mode);
    if (mode.k <= k_max) modes.push_back(mode);
  }
  return assemble(d, modes, ns,
                  [&](ModeIndex mode, const std::vector<double>& nodes) {
                    const auto& profile = f.at(mode);
                    std::vector<Complex> v;
                    for (double r : nodes) v.push_back(profile(r * r));
                    return v;
                  });
}

InterpolationResult polyharmonic_interpolant(const Sampler& f, int d,
                                             const NodeSet& ns, int k_max,
                                             const SphereRule& rule) {
  ns.validate();
  if (k_max < 0) return {AlmansiTable(d), 0.0, 0.0};
  const std::vector<ModeIndex> modes = modes_up_to(d, k_max);
  // Sample once per distinct node list.
  std::set<std::vector<double>> lists;
  for (const auto& mode : modes) lists.insert(ns.nodes_for(mode));
  std::map<std::vector<double>, std::map<ModeIndex, std::vector<Complex>>>
      samples;
  for (const auto& list : lists) {
    samples[list] = decompose_samples(f, d, k_max, list, rule);
  }
  return assemble(d, modes, ns,
                  [&](ModeIndex mode, const std::vector<double>& nodes) {
                    const auto& raw = samples.at(nodes).at(mode);
                    std::vector<Complex> v(nodes.size());
                    for (std::size_t j = 0; j < nodes.size(); ++j) {
                      if (mode.k > 0 && nodes[j] == 0.0) {
                        throw PreconditionError(
                            "sampled interpolation: node r = 0 with k > 0");
                      }
                      v[j] = raw[j] / std::pow(nodes[j], mode.k);
                    }
                    return v;
                  });
}

std::map<ModeIndex, double> mode_norms(const AlmansiTable& f) {
  std::map<ModeIndex, double> out;
  for (const auto& [mode, c] : f.entries()) {
    double sum = 0.0;
    for (const auto& v : c) sum += std::norm(v);
    out[mode] = std::sqrt(sum);
  }
  return out;
}

double interpolation_error_bound(const std::map<ModeIndex, double>& norms,
                                 const NodeSet& ns, int d) {
  if (!(ns.b >= 0.0 && ns.b < 1.0)) throw DomainError("error bound needs 0 <= b < 1");
  const int n = ns.order();
  if (n < 0) throw PreconditionError("error bound: empty node set");
  double sum = 0.0;
  for (const auto& [mode, norm] : norms) {
    sum += norm * std::pow(ns.b, mode.k) * harmonic_sup_bound(d, mode.k);
  }
  return 0.5 * std::pow(2.0 / (1.0 - ns.b), n + 2) * sum;
}

double interpolation_error_bound_nodal(
    const std::map<ModeIndex, double>& norms, const NodeSet& ns, int d,
    int k_max) {
  ns.validate();
  const double b2 = ns.b * ns.b;
  double sum = 0.0;
  for (const auto& [mode, norm] : norms) {
    double factor;
    if (mode.k <= k_max) {
      double num = 1.0;
      double den = 1.0 - b2;
      for (double r : ns.nodes_for(mode)) {
        num *= b2 + r * r;
        den *= 1.0 - r * r;
      }
      factor = num / den;
    } else {
      factor = 1.0 / std::sqrt(1.0 - b2 * b2);
    }
    sum += norm * std::pow(ns.b, mode.k) * harmonic_sup_bound(d, mode.k) *
           factor;
  }
  return sum;
}

}  // namespace phardy
