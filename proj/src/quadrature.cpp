#include "dunkl/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl::quad {
namespace {

// Legendre P_n and P_n' at x by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

Rule build_gauss_legendre(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, dp] = legendre(n, x);
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

Rule build_gauss_lobatto(int n) {
  // Interior nodes are the roots of P'_{n-1}; start from Chebyshev-Lobatto points.
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = n - 1;
  for (int i = 0; i < n; ++i) {
    double x = -std::cos(std::numbers::pi * i / m);
    if (i > 0 && i < m) {
      for (int it = 0; it < 100; ++it) {
        // (1-x^2) P_m'' = 2x P_m' - m(m+1) P_m
        const auto [p, dp] = legendre(m, x);
        const double d2p = (2.0 * x * dp - m * (m + 1.0) * p) / (1.0 - x * x);
        const double dx = dp / d2p;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
    }
    const double pm = legendre(m, x).first;
    r.nodes[i] = x;
    r.weights[i] = 2.0 / (m * (m + 1.0) * pm * pm);
  }
  return r;
}

const Rule& cached(std::map<int, std::unique_ptr<Rule>>& cache, int n, Rule (*make)(int)) {
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Rule>(make(n));
  return *slot;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  if (n < 1) throw ArgumentError("gauss_legendre: order must be >= 1");
  static std::map<int, std::unique_ptr<Rule>> cache;
  return cached(cache, n, &build_gauss_legendre);
}

const Rule& gauss_lobatto(int n) {
  if (n < 2) throw ArgumentError("gauss_lobatto: order must be >= 2");
  static std::map<int, std::unique_ptr<Rule>> cache;
  return cached(cache, n, &build_gauss_lobatto);
}

cplx integrate(const std::function<cplx(double)>& f, double a, double b, int panels, int order) {
  const Rule& rule = gauss_legendre(order);
  const double h = (b - a) / panels;
  cplx sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    cplx part = 0.0;
    for (int i = 0; i < order; ++i) part += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    sum += 0.5 * h * part;
  }
  return sum;
}

cplx integrate_to_singular_edge(const std::function<cplx(double)>& g, double lo, double edge,
                                cplx exponent, const SingularOptions& opts) {
  if (!(edge > lo)) throw ArgumentError("integrate_to_singular_edge: need lo < edge");
  if (exponent.real() >= 1.0)
    throw DomainError("integrate_to_singular_edge: Re(exponent) >= 1 is not integrable");
  const double length = edge - lo;
  const Rule& rule = gauss_legendre(opts.order);

  if (exponent == cplx(0.0)) {
    const int panels = std::max(1, static_cast<int>(std::ceil(length / opts.max_panel_width)));
    return integrate(g, lo, edge, panels, opts.order);
  }

  // Work in v = edge - r.
  auto weighted = [&](double v) { return std::exp(-exponent * std::log(v)) * g(edge - v); };

  const double delta = 1e-6 * std::min(length, opts.max_panel_width);
  const cplx g0 = g(edge);
  const cplx g1 = (g(edge - delta) - g0) / delta;
  const double log_delta = std::log(delta);
  cplx sum = g0 * std::exp((1.0 - exponent) * log_delta) / (1.0 - exponent) +
             g1 * std::exp((2.0 - exponent) * log_delta) / (2.0 - exponent);

  const double im = std::abs(exponent.imag());
  const double ratio = std::min(2.0, 1.0 + 4.0 / std::max(im, 1e-300));
  double v0 = delta;
  while (v0 < length) {
    const double v1 = std::min({v0 * ratio, v0 + opts.max_panel_width, length});
    const double mid = 0.5 * (v0 + v1), half = 0.5 * (v1 - v0);
    cplx part = 0.0;
    for (int i = 0; i < opts.order; ++i) part += rule.weights[i] * weighted(mid + half * rule.nodes[i]);
    sum += half * part;
    v0 = v1;
  }
  return sum;
}

}  // namespace dunkl::quad
