#pragma once

#include <map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "phardy/almansi.hpp"

namespace phardy {

using Rational = boost::multiprecision::cpp_rational;

/// L_(k) on the ladder r^{k+2s}: q[s] is the coefficient of r^{k+2s}. The
/// result has one entry less (q[0] r^k is annihilated) and carries
/// 4 s (d/2 + k + s - 1) q[s] at position s - 1.
std::vector<double> apply_Lk(int d, int k, std::span<const double> q);
std::vector<Rational> apply_Lk_exact(int d, int k,
                                     std::span<const Rational> q);

/// gamma^k_{m,s} = L_(k)^m [r^{k+2s}] at r = 1
///   = 4^m s!/(s-m)! (d/2+k+s-1)(d/2+k+s-2)...(d/2+k+s-m),  zero for s < m.
double gamma(int d, int k, int m, int s);
Rational gamma_exact(int d, int k, int m, int s);

/// Upper triangular N x N matrix, entries[m][j] for 0 <= m, j < N.
struct TriangularSystem {
  int d = 2;
  int k = 0;
  int N = 1;
  std::vector<std::vector<double>> entries;
};

/// U_k[m][j] = gamma(d, k, m, j).
TriangularSystem build_Uk(int d, int k, int N);
/// U_k with row m divided by (d/2 + k)^m. Entries converge to
/// 4^m j!/(j-m)! as k grows.
TriangularSystem build_Uk_scaled(int d, int k, int N);

/// Boundary data g^m_{k,l} = Delta^m u |_{r=1} in harmonic coordinates,
/// m = 0..N-1. All m share one mode support (missing means zero).
struct BoundaryData {
  int d = 2;
  int N = 1;
  std::vector<std::map<ModeIndex, Complex>> g;

  /// Union of mode supports over all m.
  std::vector<ModeIndex> support() const;
  Complex value(int m, ModeIndex mode) const;
};

/// g^m_{k,l} = sum_{j=m}^{N-1} u_{k,l;j} gamma(d, k, m, j). Throws
/// PreconditionError if a mode carries more than N coefficients.
BoundaryData forward_boundary(const AlmansiTable& table, int N);

/// Per mode back-substitution on the row-rescaled system U_k u = g.
AlmansiTable solve_dirichlet(const BoundaryData& data);

/// sum_{k <= K, l} (1 + k(k+d-2))^{-m} |g^m_{k,l}|^2 for each m, with the
/// running partial sums partial_sums[m][K] for K = 0..k_max.
struct SobolevDiagnostic {
  std::vector<double> totals;
  std::vector<std::vector<double>> partial_sums;
};
SobolevDiagnostic sobolev_diagnostic(const BoundaryData& data);

}  // namespace phardy
