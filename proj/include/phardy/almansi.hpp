#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "phardy/sphere.hpp"

namespace phardy {

using Complex = std::complex<double>;

/// Almansi coefficient table: mode (k, l) -> [c_0, ..., c_J] representing
///
///   f(z, theta) = sum_{k,l} sum_j c_{k,l;j} z^{k+2j} Y_{k,l}(theta).
///
/// Vectors may have different lengths per mode. Iteration order is (k, l)
/// ascending, which fixes every summation order downstream.
class AlmansiTable {
 public:
  using Entries = std::map<ModeIndex, std::vector<Complex>>;

  explicit AlmansiTable(int d);

  int dimension() const { return d_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Replaces the coefficients of `mode`; validates l against a_k.
  void set(ModeIndex mode, std::vector<Complex> coeffs);
  /// nullptr when the mode carries no coefficients.
  const std::vector<Complex>* find(ModeIndex mode) const;
  /// Coefficient c_{k,l;j}, zero when absent.
  Complex coefficient(ModeIndex mode, int j) const;

  /// Largest k present (-1 for an empty table).
  int max_k() const;
  /// Largest j index present (-1 for an empty table).
  int max_j() const;
  /// Largest circle frequency k + 2j present (-1 for an empty table).
  int max_frequency() const;

  /// The basis element b_{k,l;j} = z^{k+2j} Y_{k,l}.
  static AlmansiTable basis(int d, ModeIndex mode, int j);

  AlmansiTable& operator+=(const AlmansiTable& other);
  AlmansiTable& operator*=(Complex scale);
  friend AlmansiTable operator+(AlmansiTable a, const AlmansiTable& b) {
    return a += b;
  }
  friend AlmansiTable operator*(Complex s, AlmansiTable a) { return a *= s; }

 private:
  int d_;
  Entries entries_;
};

/// Multivariate polynomial sum_alpha c_alpha x^alpha in d variables.
class MultiPoly {
 public:
  using Terms = std::map<std::vector<int>, Complex>;

  explicit MultiPoly(int d);
  int dimension() const { return d_; }
  const Terms& terms() const { return terms_; }

  /// Adds c to the coefficient of x^alpha.
  void add_term(std::vector<int> alpha, Complex c);
  /// Total degree, -1 for the zero polynomial.
  int degree() const;
  Complex operator()(std::span<const double> x) const;

 private:
  int d_;
  Terms terms_;
};

/// Gauss representation of a polynomial (d in {2, 3}): c_{k,l;j} nonzero only
/// for k + 2j <= deg p. Throws ResourceError beyond kMaxGaussDegree.
AlmansiTable gauss_decompose(const MultiPoly& p);
inline constexpr int kMaxGaussDegree = 64;

/// Largest |p(r theta) - evaluate(T, r, theta)| over `samples` random points
/// of the closed unit ball (seeded).
double decomposition_residual(const MultiPoly& p, const AlmansiTable& table,
                              int samples = 64, unsigned long long seed = 1);

/// f(r, theta) on the real ball.
using Sampler = std::function<Complex(double r, std::span<const double> theta)>;

/// Laplace-Fourier coefficients f_{k,l}(r_i) = int f(r_i theta) Y_{k,l}(theta)
/// for all k <= k_max, computed with `rule` (needs exact_degree >= 2 k_max).
std::map<ModeIndex, std::vector<Complex>> decompose_samples(
    const Sampler& f, int d, int k_max, std::span<const double> radii,
    const SphereRule& rule);

/// r-complexified value f(z theta), |z| < 1, summed k-major then j.
Complex evaluate(const AlmansiTable& table, Complex z,
                 std::span<const double> theta);

/// Unchecked radius variant used for boundary values (|z| <= 1).
Complex evaluate_unchecked(const AlmansiTable& table, Complex z,
                           std::span<const double> theta);

/// An element of H^2 given by a coefficient generator.
///
/// `coefficients(mode)` returns the stored prefix of c_{k,l;.}. `tail_norm(K)`
/// must bound the l^2 norm of every coefficient not returned for k <= K plus
/// all coefficients with k > K.
struct AlmansiSeries {
  int d = 2;
  std::function<std::vector<Complex>(ModeIndex)> coefficients;
  std::function<double(int k_max)> tail_norm;
};

struct SeriesValue {
  Complex value;
  double tail_bound = 0.0;
};

/// The table formed by all modes k <= k_max of a series.
AlmansiTable truncate(const AlmansiSeries& series, int k_max);

/// Truncated value plus a certified bound on the omitted tail:
///   |tail| <= tail_norm(K) * sqrt(S(|z|)),
///   S(rho) = (1 + rho^2) / ((1 - rho^2)^{d-1} (1 - rho^4) omega_d),
/// the sum of rho^{2(k+2j)} a_k / omega_d over all (k, j).
SeriesValue evaluate(const AlmansiSeries& series, int k_max, Complex z,
                     std::span<const double> theta);

/// S(rho) above: squared norm of the point evaluation functional at |z| = rho.
double evaluation_kernel_norm2(int d, double rho);

}  // namespace phardy
