#include "phardy/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace phardy {

double hardy_norm(const AlmansiTable& table) {
  double sum = 0.0;
  for (const auto& [mode, c] : table.entries()) {
    for (const auto& v : c) sum += std::norm(v);
  }
  return std::sqrt(sum);
}

NormReport hardy_norm(const AlmansiSeries& series, int k_max) {
  NormReport out;
  out.value = hardy_norm(truncate(series, k_max));
  out.tail_bound = series.tail_norm ? series.tail_norm(k_max) : 0.0;
  return out;
}

Complex inner_product(const AlmansiTable& f, const AlmansiTable& g) {
  if (f.dimension() != g.dimension()) {
    throw DomainError("inner_product: tables of different d");
  }
  Complex sum{};
  for (const auto& [mode, c] : f.entries()) {
    const auto* other = g.find(mode);
    if (other == nullptr) continue;
    const std::size_t n = std::min(c.size(), other->size());
    for (std::size_t j = 0; j < n; ++j) sum += c[j] * std::conj((*other)[j]);
  }
  return sum;
}

BoundaryTable::BoundaryTable(int d) : d_(d) {
  if (d < 2) throw DomainError("ambient dimension d must be >= 2");
}

void BoundaryTable::set(BoundaryKey key, Complex value) {
  check_mode(d_, key.mode);
  if (value == Complex{}) {
    entries_.erase(key);
  } else {
    entries_[key] = value;
  }
}

Complex evaluate_trace(const BoundaryTable& table, double phi,
                       std::span<const double> theta) {
  if (table.entries().empty()) return {};
  int k_max = 0;
  for (const auto& [key, v] : table.entries()) {
    k_max = std::max(k_max, key.mode.k);
  }
  const auto ys = eval_harmonics_up_to(table.dimension(), k_max, theta);
  Complex sum{};
  for (const auto& [key, v] : table.entries()) {
    sum += v * std::polar(1.0, key.j * phi) * ys[key.mode.k][key.mode.l - 1];
  }
  return sum;
}

BoundaryTable boundary_trace(const AlmansiTable& table) {
  BoundaryTable out(table.dimension());
  for (const auto& [mode, c] : table.entries()) {
    for (std::size_t m = 0; m < c.size(); ++m) {
      out.set({mode.k + 2 * static_cast<int>(m), mode}, c[m]);
    }
  }
  return out;
}

RieszReport check_riesz(const BoundaryTable& table) {
  RieszReport report;
  for (const auto& [key, v] : table.entries()) {
    if (v == Complex{}) continue;
    const int offset = key.j - key.mode.k;
    if (offset < 0 || offset % 2 != 0) {
      report.admissible = false;
      report.violations.push_back(key);
    }
  }
  return report;
}

namespace {

std::string describe(const RieszReport& report) {
  std::string msg = "boundary data violates the Riesz conditions at";
  for (const auto& key : report.violations) {
    msg += " (j=" + std::to_string(key.j) + ",k=" +
           std::to_string(key.mode.k) + ",l=" + std::to_string(key.mode.l) +
           ")";
  }
  return msg;
}

}  // namespace

RieszViolation::RieszViolation(RieszReport report)
    : PreconditionError(describe(report)), report_(std::move(report)) {}

AlmansiTable solve_dirichlet_L2(const BoundaryTable& table) {
  auto report = check_riesz(table);
  if (!report.admissible) throw RieszViolation(std::move(report));
  AlmansiTable out(table.dimension());
  std::map<ModeIndex, std::vector<Complex>> coeffs;
  for (const auto& [key, v] : table.entries()) {
    const int m = (key.j - key.mode.k) / 2;
    auto& c = coeffs[key.mode];
    if (static_cast<int>(c.size()) <= m) c.resize(m + 1);
    c[m] = v;
  }
  for (auto& [mode, c] : coeffs) out.set(mode, std::move(c));
  return out;
}

double max_principle_bound(const AlmansiTable& table, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("max_principle_bound: q must lie in (0, 1)");
  }
  return std::pow(1.0 - q, -table.dimension()) * hardy_norm(table);
}

}  // namespace phardy
