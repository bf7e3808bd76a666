#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace dunkl::quad {

using cplx = std::complex<double>;

/// Nodes and weights of a rule on the reference interval [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with n points. Rules are computed once and cached.
const Rule& gauss_legendre(int n);

/// Gauss-Lobatto-Legendre rule with n points (endpoints included).
const Rule& gauss_lobatto(int n);

/// Composite Gauss-Legendre over [a, b] split into equal panels.
cplx integrate(const std::function<cplx(double)>& f, double a, double b, int panels,
               int order = 16);

/// Options for integrals with an algebraic endpoint singularity.
struct SingularOptions {
  /// Largest panel width away from the singular endpoint.
  double max_panel_width = 0.25;
  /// Gauss-Legendre order per panel.
  int order = 16;
};

/// Computes  ∫_lo^edge (edge - r)^(-exponent) g(r) dr  for smooth g and
/// Re(exponent) < 1. Near the edge the panels are graded geometrically, with
/// a ratio tightened for large |Im(exponent)| so the log-oscillation of
/// (edge - r)^(-i Im exponent) stays resolved; the innermost sliver is
/// integrated in closed form against a linear model of g.
cplx integrate_to_singular_edge(const std::function<cplx(double)>& g, double lo, double edge,
                                cplx exponent, const SingularOptions& opts = {});

}  // namespace dunkl::quad
