#pragma once

#include <vector>

namespace phardy {

/// One-dimensional quadrature rule: sum_i weights[i] * f(nodes[i]).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], exact for polynomials of degree
/// 2n - 1. Nodes ascending.
GaussRule gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

/// `panels` equal sub-intervals of [a, b], each with a `per_panel`-point
/// Gauss-Legendre rule.
GaussRule composite_gauss_legendre(int panels, int per_panel, double a,
                                   double b);

}  // namespace phardy
