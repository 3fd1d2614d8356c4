#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "phardy/almansi.hpp"

namespace phardy {

/// Radial interpolation nodes r_j in [0, b], b < 1. `shared` applies to every
/// mode without an entry in `per_mode`. All lists hold N + 1 nodes.
struct NodeSet {
  double b = 0.5;
  std::vector<double> shared;
  std::map<ModeIndex, std::vector<double>> per_mode;

  const std::vector<double>& nodes_for(ModeIndex mode) const;
  /// N, the common list length minus one.
  int order() const;
  /// Throws DomainError for b outside [0, 1), PreconditionError for nodes
  /// outside [0, b] or lists of unequal length, DomainError for duplicates.
  void validate() const;
};

/// omega(s) = prod_j (s - r_j^2), ascending monomial coefficients (length
/// nodes.size() + 1). Duplicate nodes throw DomainError.
std::vector<double> nodal_polynomial(std::span<const double> nodes);

/// Interpolating polynomial of degree <= N in s = z^2 through
/// (r_j^2, values_j), held in barycentric form.
class ModeInterpolant {
 public:
  ModeInterpolant(std::span<const double> nodes,
                  std::span<const Complex> values);

  Complex operator()(Complex s) const;
  /// Ascending monomial coefficients in s, length N + 1.
  const std::vector<Complex>& monomial() const { return monomial_; }
  /// max_j |monomial(s_j) - values_j|.
  double residual() const { return residual_; }
  /// Frobenius norm of the inverse Vandermonde matrix in s.
  double inverse_vandermonde_norm() const { return inv_norm_; }

 private:
  std::vector<double> s_;
  std::vector<double> w_;
  std::vector<Complex> values_;
  std::vector<Complex> monomial_;
  double residual_ = 0.0;
  double inv_norm_ = 0.0;
};

ModeInterpolant interpolate_mode(std::span<const Complex> values,
                                 std::span<const double> nodes);

/// Reduced radial profile F with f_{k,l}(z) = z^k F(z^2).
using ModeProfile = std::function<Complex(Complex s)>;

struct InterpolationResult {
  AlmansiTable table;
  /// C_{N,b} with ||P_N|| <= C_{N,b} ||f||: the largest over modes of
  /// ||V^{-1}||_F sqrt(sum_j 1 / (1 - s_j^2)).
  double stability_constant = 0.0;
  /// Largest monomial residual over modes.
  double max_residual = 0.0;
};

/// P_N from table coefficients, modes with k <= k_max.
InterpolationResult polyharmonic_interpolant(const AlmansiTable& f,
                                             const NodeSet& ns, int k_max);
/// P_N from reduced profiles, modes with k <= k_max.
InterpolationResult polyharmonic_interpolant(
    int d, const std::map<ModeIndex, ModeProfile>& f, const NodeSet& ns,
    int k_max);
/// P_N from point samples: Laplace-Fourier coefficients at the nodes via
/// `rule`. Node r = 0 is rejected for k > 0.
InterpolationResult polyharmonic_interpolant(const Sampler& f, int d,
                                             const NodeSet& ns, int k_max,
                                             const SphereRule& rule);

/// H^2 norm of each mode, sqrt(sum_j |c_{k,l;j}|^2).
std::map<ModeIndex, double> mode_norms(const AlmansiTable& f);

/// (1/2) 2^{N+2} / (1-b)^{N+2} sum_{k,l} ||f_{k,l}|| b^k Y_max(k), a bound on
/// |f - P_N| over |z| <= b for every mode set, including modes P_N drops.
double interpolation_error_bound(const std::map<ModeIndex, double>& norms,
                                 const NodeSet& ns, int d);

/// Sharper variant using the nodes themselves:
///   ||f_{k,l}|| b^k Y_max(k) prod_j (b^2 + s_j) / (prod_j (1 - s_j) (1 - b^2))
/// for k <= k_max, and ||f_{k,l}|| b^k Y_max(k) / sqrt(1 - b^4) above.
double interpolation_error_bound_nodal(
    const std::map<ModeIndex, double>& norms, const NodeSet& ns, int d,
    int k_max);

}  // namespace phardy
