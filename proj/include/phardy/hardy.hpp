#pragma once

#include <map>
#include <span>
#include <vector>

#include "phardy/almansi.hpp"
#include "phardy/errors.hpp"

namespace phardy {

/// Norm of an element of H^2 on the quadric ball.
///
/// For a finite table this is sqrt(sum |c_{k,l;j}|^2). The sum runs in table
/// order so the result is reproducible bit for bit.
double hardy_norm(const AlmansiTable& table);

/// Truncated norm of a series plus its tail bound.
struct NormReport {
  double value = 0.0;
  double tail_bound = 0.0;
};
NormReport hardy_norm(const AlmansiSeries& series, int k_max);

/// <f, g> = sum c^f_{k,l;j} conj(c^g_{k,l;j}).
Complex inner_product(const AlmansiTable& f, const AlmansiTable& g);

/// Address of a boundary Fourier coefficient: circle frequency j (any integer)
/// against e^{i j phi} Y_{k,l}(theta).
struct BoundaryKey {
  int j = 0;
  ModeIndex mode;

  friend auto operator<=>(const BoundaryKey&, const BoundaryKey&) = default;
};

/// Fourier-Laplace coefficients of a boundary function f*(e^{i phi}, theta).
class BoundaryTable {
 public:
  using Entries = std::map<BoundaryKey, Complex>;

  explicit BoundaryTable(int d);
  int dimension() const { return d_; }
  const Entries& entries() const { return entries_; }
  void set(BoundaryKey key, Complex value);

 private:
  int d_;
  Entries entries_;
};

/// f* = sum over entries of v e^{i j phi} Y_{k,l}(theta) (d in {2, 3}).
Complex evaluate_trace(const BoundaryTable& table, double phi,
                       std::span<const double> theta);

/// Boundary values: coefficient c_{k,l;m} lands at frequency j = k + 2m.
BoundaryTable boundary_trace(const AlmansiTable& table);

/// Entries allowed to be nonzero only at j in {k, k+2, k+4, ...}.
struct RieszReport {
  bool admissible = true;
  std::vector<BoundaryKey> violations;
};
RieszReport check_riesz(const BoundaryTable& table);

/// Thrown by solve_dirichlet_L2 on inadmissible data.
class RieszViolation : public PreconditionError {
 public:
  explicit RieszViolation(RieszReport report);
  const RieszReport& report() const { return report_; }

 private:
  RieszReport report_;
};

/// Inverse of boundary_trace on Riesz-admissible tables.
AlmansiTable solve_dirichlet_L2(const BoundaryTable& table);

/// (1 - q)^{-d} ||f||: bound on |f(zeta theta)| for |zeta| <= q.
double max_principle_bound(const AlmansiTable& table, double q);

}  // namespace phardy
