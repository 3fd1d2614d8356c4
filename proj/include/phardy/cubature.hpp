#pragma once

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "phardy/almansi.hpp"
#include "phardy/errors.hpp"
#include "phardy/interp.hpp"

namespace phardy {

/// Atomic radial measure sum_m w_m delta_{r_m}.
struct RadialMeasure {
  std::vector<std::pair<double, double>> atoms;

  /// int r^p dm.
  double moment(double p) const;
  double total_mass() const;
};

/// Signed measure on the ball through its component measures
/// dmu_{k,l}(r) = int Y_{k,l}(theta) dmu(r theta). A mode without an entry
/// has the zero component.
struct PseudoPositiveMeasure {
  int d = 2;
  double b = 1.0;
  std::map<ModeIndex, RadialMeasure> components;

  const RadialMeasure* component(ModeIndex mode) const;
  /// Largest atom radius over all components (0 when empty).
  double max_radius() const;
};

/// Raised when a component measure has a negative atom.
class PseudoPositivityViolation : public DomainError {
 public:
  PseudoPositivityViolation(ModeIndex mode, double weight);
  ModeIndex mode() const { return mode_; }
  double weight() const { return weight_; }

 private:
  ModeIndex mode_;
  double weight_;
};

/// sum_i w_i delta_{x_i} with |x_i| < 1.
struct AtomCloud {
  int d = 2;
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
};

/// rho(r) dr x sigma(theta) dtheta with rho discretized as radial atoms.
/// An empty density means sigma = 1 (surface measure).
struct ProductMeasure {
  int d = 2;
  std::vector<std::pair<double, double>> radial_atoms;
  std::function<double(std::span<const double>)> density;
};

/// Groups atoms by radius with weight sum_i w_i Y_{k,l}(theta_i); an atom at
/// the origin only feeds the k = 0 component. With `strict`, a negative
/// resulting weight (below -1e-14) throws PseudoPositivityViolation.
RadialMeasure component_measure(const AtomCloud& mu, ModeIndex mode,
                                bool strict = true);
/// Radial atoms scaled by int Y_{k,l} sigma dtheta, the integral done by
/// `rule` (exact for the uniform case).
RadialMeasure component_measure(const ProductMeasure& mu, ModeIndex mode,
                                const SphereRule& rule, bool strict = true);

/// Components for every mode k <= k_max; zero components are omitted.
PseudoPositiveMeasure to_components(const AtomCloud& mu, double b, int k_max,
                                    bool strict = true);
PseudoPositiveMeasure to_components(const ProductMeasure& mu, double b,
                                    int k_max, const SphereRule& rule,
                                    bool strict = true);

/// Lebesgue measure on the ball of radius b: the single component (0, 1)
/// carries omega_d^{1/2} r^{d-1} dr discretized by n_radial Gauss-Legendre
/// atoms on (0, b).
PseudoPositiveMeasure lebesgue_ball(int d, double b, int n_radial);

/// Weights with sum_j lambda_j t_j^{k+2i} = int r^{k+2i} dm for i = 0..N,
/// N = nodes.size() - 1, via mu_j = int r^k l_j(r^2) dm and
/// lambda_j = mu_j / t_j^k.
std::vector<double> quadrature_weights(const RadialMeasure& m,
                                       std::span<const double> nodes, int k);

struct CubatureResult {
  Complex value;
  /// Bound on the modes above k_max that were left out:
  /// sum ||f_{k,l}|| / sqrt(1 - B^4) int r^k d mu_{k,l}.
  double dropped_bound = 0.0;
};

/// C_N(f) = sum_{k <= k_max} sum_l sum_j lambda_{k,l;j} f_{k,l}(t_{k,l;j}).
CubatureResult cubature(const AlmansiTable& f, const PseudoPositiveMeasure& mu,
                        const NodeSet& ns, int k_max);
/// Same with reduced profiles, f_{k,l}(t) = t^k F(t^2). No dropped bound.
CubatureResult cubature(int d, const std::map<ModeIndex, ModeProfile>& f,
                        const PseudoPositiveMeasure& mu, const NodeSet& ns,
                        int k_max);

/// int f dmu mode by mode from the table coefficients and the component
/// moments, modes k <= k_max.
Complex integrate_table(const AlmansiTable& f, const PseudoPositiveMeasure& mu,
                        int k_max);

/// 2^{N+1} / (1-B)^{N+2} sum_{k <= k_max} ||f_{k,l}|| int r^k dmu_{k,l}
/// plus the dropped-mode bound above k_max, B = max(ns.b, max atom radius).
double cubature_error_bound(const std::map<ModeIndex, double>& norms,
                            const PseudoPositiveMeasure& mu, const NodeSet& ns,
                            int k_max);

struct PseudoPositivityReport {
  bool passed = true;
  std::vector<ModeIndex> violations;
};
PseudoPositivityReport pseudo_positivity_report(const PseudoPositiveMeasure& mu,
                                                int k_max);

}  // namespace phardy
