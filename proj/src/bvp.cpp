#include "phardy/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "phardy/errors.hpp"

namespace phardy {

namespace {

void check_d(int d) {
  if (d < 2) throw DomainError("ambient dimension d must be >= 2");
}

}  // namespace

std::vector<double> apply_Lk(int d, int k, std::span<const double> q) {
  check_d(d);
  if (q.size() <= 1) return {};
  std::vector<double> out(q.size() - 1);
  const double base = 0.5 * d + k;
  for (std::size_t s = 1; s < q.size(); ++s) {
    out[s - 1] = 4.0 * s * (base + s - 1.0) * q[s];
  }
  return out;
}

std::vector<Rational> apply_Lk_exact(int d, int k,
                                     std::span<const Rational> q) {
  check_d(d);
  if (q.size() <= 1) return {};
  std::vector<Rational> out(q.size() - 1);
  const Rational base = Rational(d, 2) + k;
  for (std::size_t s = 1; s < q.size(); ++s) {
    const long long si = static_cast<long long>(s);
    out[s - 1] = 4 * si * (base + si - 1) * q[s];
  }
  return out;
}

double gamma(int d, int k, int m, int s) {
  check_d(d);
  if (m < 0 || s < 0) throw DomainError("gamma: m and s must be >= 0");
  if (s < m) return 0.0;
  const double base = 0.5 * d + k;
  double v = 1.0;
  for (int i = 0; i < m; ++i) {
    v *= 4.0 * (s - i) * (base + s - 1 - i);
  }
  return v;
}

Rational gamma_exact(int d, int k, int m, int s) {
  check_d(d);
  if (m < 0 || s < 0) throw DomainError("gamma: m and s must be >= 0");
  if (s < m) return Rational(0);
  const Rational base = Rational(d, 2) + k;
  Rational v = 1;
  for (int i = 0; i < m; ++i) {
    v *= 4 * (s - i) * (base + s - 1 - i);
  }
  return v;
}

TriangularSystem build_Uk(int d, int k, int N) {
  if (N < 1) throw DomainError("build_Uk: N must be >= 1");
  TriangularSystem t{d, k, N, {}};
  t.entries.assign(N, std::vector<double>(N, 0.0));
  for (int m = 0; m < N; ++m) {
    for (int j = m; j < N; ++j) t.entries[m][j] = gamma(d, k, m, j);
  }
  return t;
}

TriangularSystem build_Uk_scaled(int d, int k, int N) {
  if (N < 1) throw DomainError("build_Uk_scaled: N must be >= 1");
  TriangularSystem t{d, k, N, {}};
  t.entries.assign(N, std::vector<double>(N, 0.0));
  const double base = 0.5 * d + k;
  for (int m = 0; m < N; ++m) {
    for (int j = m; j < N; ++j) {
      // gamma / base^m, one factor at a time to stay in range for large k.
      double v = 1.0;
      for (int i = 0; i < m; ++i) {
        v *= 4.0 * (j - i) * ((base + j - 1 - i) / base);
      }
      t.entries[m][j] = v;
    }
  }
  return t;
}

std::vector<ModeIndex> BoundaryData::support() const {
  std::set<ModeIndex> modes;
  for (const auto& table : g) {
    for (const auto& [mode, v] : table) modes.insert(mode);
  }
  return {modes.begin(), modes.end()};
}

Complex BoundaryData::value(int m, ModeIndex mode) const {
  if (m < 0 || m >= static_cast<int>(g.size())) return {};
  auto it = g[m].find(mode);
  return it == g[m].end() ? Complex{} : it->second;
}

BoundaryData forward_boundary(const AlmansiTable& table, int N) {
  if (N < 1) throw DomainError("forward_boundary: N must be >= 1");
  const int d = table.dimension();
  BoundaryData out{d, N, std::vector<std::map<ModeIndex, Complex>>(N)};
  for (const auto& [mode, u] : table.entries()) {
    if (static_cast<int>(u.size()) > N) {
      throw PreconditionError(
          "forward_boundary: table is not polyharmonic of order N");
    }
    for (int m = 0; m < N; ++m) {
      Complex sum{};
      for (int j = m; j < static_cast<int>(u.size()); ++j) {
        sum += u[j] * gamma(d, mode.k, m, j);
      }
      out.g[m][mode] = sum;
    }
  }
  return out;
}

AlmansiTable solve_dirichlet(const BoundaryData& data) {
  check_d(data.d);
  if (data.N < 1) throw DomainError("solve_dirichlet: N must be >= 1");
  if (static_cast<int>(data.g.size()) > data.N) {
    throw DomainError("solve_dirichlet: more boundary tables than N");
  }
  AlmansiTable out(data.d);
  const int N = data.N;
  for (const ModeIndex& mode : data.support()) {
    check_mode(data.d, mode);
    const TriangularSystem u_k = build_Uk_scaled(data.d, mode.k, N);
    const double base = 0.5 * data.d + mode.k;
    std::vector<Complex> rhs(N);
    double scale = 1.0;
    for (int m = 0; m < N; ++m) {
      rhs[m] = data.value(m, mode) / scale;
      scale *= base;
    }
    std::vector<Complex> u(N);
    for (int j = N - 1; j >= 0; --j) {
      Complex acc = rhs[j];
      for (int i = j + 1; i < N; ++i) acc -= u_k.entries[j][i] * u[i];
      u[j] = acc / u_k.entries[j][j];
    }
    while (!u.empty() && u.back() == Complex{}) u.pop_back();
    if (!u.empty()) out.set(mode, std::move(u));
  }
  return out;
}

SobolevDiagnostic sobolev_diagnostic(const BoundaryData& data) {
  check_d(data.d);
  SobolevDiagnostic out;
  const int n_tables = static_cast<int>(data.g.size());
  int k_max = -1;
  for (const auto& table : data.g) {
    for (const auto& [mode, v] : table) k_max = std::max(k_max, mode.k);
  }
  out.totals.assign(n_tables, 0.0);
  out.partial_sums.assign(n_tables,
                          std::vector<double>(std::max(k_max + 1, 0), 0.0));
  for (int m = 0; m < n_tables; ++m) {
    std::vector<double> per_k(std::max(k_max + 1, 0), 0.0);
    for (const auto& [mode, v] : data.g[m]) {
      const double eig = 1.0 + static_cast<double>(mode.k) *
                                   (mode.k + data.d - 2);
      per_k[mode.k] += std::norm(v) * std::pow(eig, -m);
    }
    double running = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      running += per_k[k];
      out.partial_sums[m][k] = running;
    }
    out.totals[m] = running;
  }
  return out;
}

}  // namespace phardy
