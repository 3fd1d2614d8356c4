#include "phardy/almansi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phardy/errors.hpp"
#include "phardy/parallel.hpp"
#include "phardy/random.hpp"

namespace phardy {

AlmansiTable::AlmansiTable(int d) : d_(d) {
  if (d < 2) throw DomainError("ambient dimension d must be >= 2");
}

void AlmansiTable::set(ModeIndex mode, std::vector<Complex> coeffs) {
  check_mode(d_, mode);
  if (coeffs.empty()) {
    entries_.erase(mode);
    return;
  }
  entries_[mode] = std::move(coeffs);
}

const std::vector<Complex>* AlmansiTable::find(ModeIndex mode) const {
  auto it = entries_.find(mode);
  return it == entries_.end() ? nullptr : &it->second;
}

Complex AlmansiTable::coefficient(ModeIndex mode, int j) const {
  const auto* c = find(mode);
  if (c == nullptr || j < 0 || j >= static_cast<int>(c->size())) return {};
  return (*c)[j];
}

int AlmansiTable::max_k() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first.k;
}

int AlmansiTable::max_j() const {
  int m = -1;
  for (const auto& [mode, c] : entries_) {
    m = std::max(m, static_cast<int>(c.size()) - 1);
  }
  return m;
}

int AlmansiTable::max_frequency() const {
  int m = -1;
  for (const auto& [mode, c] : entries_) {
    m = std::max(m, mode.k + 2 * (static_cast<int>(c.size()) - 1));
  }
  return m;
}

AlmansiTable AlmansiTable::basis(int d, ModeIndex mode, int j) {
  if (j < 0) throw DomainError("basis index j must be >= 0");
  AlmansiTable t(d);
  std::vector<Complex> c(j + 1);
  c[j] = 1.0;
  t.set(mode, std::move(c));
  return t;
}

AlmansiTable& AlmansiTable::operator+=(const AlmansiTable& other) {
  if (other.d_ != d_) throw DomainError("adding tables of different d");
  for (const auto& [mode, c] : other.entries_) {
    auto& mine = entries_[mode];
    if (mine.size() < c.size()) mine.resize(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) mine[j] += c[j];
  }
  return *this;
}

AlmansiTable& AlmansiTable::operator*=(Complex scale) {
  for (auto& [mode, c] : entries_) {
    for (auto& v : c) v *= scale;
  }
  return *this;
}

MultiPoly::MultiPoly(int d) : d_(d) {
  if (d < 2) throw DomainError("ambient dimension d must be >= 2");
}

void MultiPoly::add_term(std::vector<int> alpha, Complex c) {
  if (static_cast<int>(alpha.size()) != d_) {
    throw DomainError("multi-index length must equal d");
  }
  for (int a : alpha) {
    if (a < 0) throw DomainError("multi-index entries must be >= 0");
  }
  terms_[std::move(alpha)] += c;
}

int MultiPoly::degree() const {
  int deg = -1;
  for (const auto& [alpha, c] : terms_) {
    if (c == Complex{}) continue;
    int s = 0;
    for (int a : alpha) s += a;
    deg = std::max(deg, s);
  }
  return deg;
}

Complex MultiPoly::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != d_) throw DomainError("dimension mismatch");
  Complex sum{};
  for (const auto& [alpha, c] : terms_) {
    double mono = 1.0;
    for (int i = 0; i < d_; ++i) mono *= std::pow(x[i], alpha[i]);
    sum += c * mono;
  }
  return sum;
}

AlmansiTable gauss_decompose(const MultiPoly& p) {
  const int d = p.dimension();
  const int deg = p.degree();
  if (deg > kMaxGaussDegree) {
    throw ResourceError("gauss_decompose: degree " + std::to_string(deg) +
                        " exceeds " + std::to_string(kMaxGaussDegree));
  }
  AlmansiTable table(d);
  if (deg < 0) return table;

  // The homogeneous part of degree n restricted to the sphere is
  // sum_j sum_l c_{n-2j,l;j} Y_{n-2j,l}, so each coefficient is one projection
  // of one homogeneous part at r = 1.
  std::vector<MultiPoly> parts(deg + 1, MultiPoly(d));
  double scale = 0.0;
  for (const auto& [alpha, c] : p.terms()) {
    int n = 0;
    for (int a : alpha) n += a;
    parts[n].add_term(alpha, c);
    scale += std::abs(c);
  }
  const SphereRule rule = build_sphere_rule(d, 2 * deg);
  std::map<ModeIndex, std::vector<Complex>> coeffs;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const auto& theta = rule.nodes[i];
    const auto ys = eval_harmonics_up_to(d, deg, theta);
    for (int n = 0; n <= deg; ++n) {
      if (parts[n].terms().empty()) continue;
      const Complex h = parts[n](theta) * rule.weights[i];
      for (int k = n % 2; k <= n; k += 2) {
        const int j = (n - k) / 2;
        for (std::size_t l = 0; l < ys[k].size(); ++l) {
          auto& v = coeffs[{k, static_cast<int>(l) + 1}];
          if (static_cast<int>(v.size()) <= j) v.resize(j + 1);
          v[j] += h * ys[k][l];
        }
      }
    }
  }
  // Quadrature noise on structurally zero coefficients is dropped.
  const double cutoff = 1e-13 * std::max(scale, 1.0);
  for (auto& [mode, v] : coeffs) {
    for (auto& c : v) {
      if (std::abs(c) <= cutoff) c = 0.0;
    }
    while (!v.empty() && v.back() == Complex{}) v.pop_back();
    if (!v.empty()) table.set(mode, std::move(v));
  }
  return table;
}

double decomposition_residual(const MultiPoly& p, const AlmansiTable& table,
                              int samples, unsigned long long seed) {
  Rng rng(seed);
  const int d = p.dimension();
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto theta = rng.unit_vector(d);
    const double r = rng.uniform();
    std::vector<double> x(theta);
    for (auto& v : x) v *= r;
    const Complex diff = p(x) - evaluate_unchecked(table, r, theta);
    worst = std::max(worst, std::abs(diff));
  }
  return worst;
}

std::map<ModeIndex, std::vector<Complex>> decompose_samples(
    const Sampler& f, int d, int k_max, std::span<const double> radii,
    const SphereRule& rule) {
  if (rule.d != d) throw PreconditionError("sphere rule dimension mismatch");
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  if (rule.exact_degree < 2 * k_max) {
    throw PreconditionError(
        "decompose_samples: rule exact_degree must be >= 2 k_max");
  }
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0)) {
      throw PreconditionError("decompose_samples: radii must lie in [0, 1)");
    }
  }
  // Harmonic values are shared across radii.
  std::vector<std::vector<std::vector<double>>> ys(rule.nodes.size());
  parallel_for(rule.nodes.size(), [&](std::size_t i) {
    ys[i] = eval_harmonics_up_to(d, k_max, rule.nodes[i]);
  });
  const auto modes = modes_up_to(d, k_max);
  std::vector<std::vector<Complex>> per_radius(radii.size());
  parallel_for(radii.size(), [&](std::size_t ri) {
    std::vector<Complex> acc(modes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const Complex v = f(radii[ri], rule.nodes[i]) * rule.weights[i];
      std::size_t m = 0;
      for (int k = 0; k <= k_max; ++k) {
        for (double y : ys[i][k]) acc[m++] += v * y;
      }
    }
    per_radius[ri] = std::move(acc);
  });
  std::map<ModeIndex, std::vector<Complex>> out;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    auto& v = out[modes[m]];
    v.resize(radii.size());
    for (std::size_t ri = 0; ri < radii.size(); ++ri) v[ri] = per_radius[ri][m];
  }
  return out;
}

Complex evaluate_unchecked(const AlmansiTable& table, Complex z,
                           std::span<const double> theta) {
  if (table.empty()) return {};
  const int d = table.dimension();
  const auto ys = eval_harmonics_up_to(d, table.max_k(), theta);
  const Complex z2 = z * z;
  Complex sum{};
  int cached_k = -1;
  Complex zk = 1.0;
  for (const auto& [mode, c] : table.entries()) {
    if (mode.k != cached_k) {
      zk = std::pow(z, mode.k);
      cached_k = mode.k;
    }
    // Horner in z^2, then the z^k factor.
    Complex radial{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) radial = radial * z2 + *it;
    sum += radial * zk * ys[mode.k][mode.l - 1];
  }
  return sum;
}

Complex evaluate(const AlmansiTable& table, Complex z,
                 std::span<const double> theta) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(
        "evaluate: |z| must be < 1 (use the boundary trace on |z| = 1)");
  }
  return evaluate_unchecked(table, z, theta);
}

AlmansiTable truncate(const AlmansiSeries& series, int k_max) {
  AlmansiTable table(series.d);
  for (const auto& mode : modes_up_to(series.d, k_max)) {
    auto c = series.coefficients(mode);
    if (!c.empty()) table.set(mode, std::move(c));
  }
  return table;
}

double evaluation_kernel_norm2(int d, double rho) {
  if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("need 0 <= rho < 1");
  const double w = rho * rho;
  return (1.0 + w) / (std::pow(1.0 - w, d - 1) * (1.0 - w * w) *
                      sphere_area(d));
}

SeriesValue evaluate(const AlmansiSeries& series, int k_max, Complex z,
                     std::span<const double> theta) {
  if (!(std::abs(z) < 1.0)) throw DomainError("evaluate: |z| must be < 1");
  const AlmansiTable head = truncate(series, k_max);
  SeriesValue out;
  out.value = evaluate_unchecked(head, z, theta);
  out.tail_bound = series.tail_norm
                       ? series.tail_norm(k_max) *
                             std::sqrt(evaluation_kernel_norm2(series.d,
                                                               std::abs(z)))
                       : 0.0;
  return out;
}

}  // namespace phardy
