#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/geometry.hpp"

namespace dunkl {

using cplx = std::complex<double>;

enum class Grading { uniform, graded };

Grading grading_from_string(const std::string& s);

/// Panels of 16 Gauss-Lobatto nodes on [0, r_max]. Values live on "storage" nodes,
/// panel-major, so the shared endpoint of two panels appears twice and may carry
/// one-sided limits of a discontinuous function.
class RadialGrid {
 public:
  static constexpr int kOrder = 16;

  /// N is rounded up to the next count of the form 15 * panels + 1.
  static std::shared_ptr<const RadialGrid> build(double r_max, int n, Grading grading = Grading::uniform);
  static std::shared_ptr<const RadialGrid> from_breaks(std::vector<double> breaks);
  /// Uniform panels of width at most h on [0, r_max], with extra breakpoints inserted.
  static std::shared_ptr<const RadialGrid> with_spacing(double r_max, double h,
                                                        const std::vector<double>& extra_breaks = {});

  /// Copy with an extra breakpoint at r (no-op if already a breakpoint).
  std::shared_ptr<const RadialGrid> with_break(double r) const;
  /// Breakpoints multiplied by s.
  std::shared_ptr<const RadialGrid> scaled(double s) const;

  int panels() const { return static_cast<int>(breaks_.size()) - 1; }
  const std::vector<double>& breaks() const { return breaks_; }
  double r_max() const { return breaks_.back(); }
  double width(int panel) const { return breaks_[panel + 1] - breaks_[panel]; }
  double max_width() const;

  std::size_t storage_size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  /// Quadrature weights for dr, aligned with nodes().
  const std::vector<double>& weights() const { return weights_; }

  std::size_t unique_size() const { return static_cast<std::size_t>(panels()) * (kOrder - 1) + 1; }
  std::vector<double> unique_nodes() const;
  /// Storage index of the k-th unique node (the right-hand panel's copy for shared endpoints).
  std::size_t unique_to_storage(std::size_t k) const;

  /// Panel containing r, clamped to [0, panels-1].
  int panel_of(double r) const;
  /// Barycentric interpolation of panel-local values at r.
  cplx interpolate(const cplx* panel_values, int panel, double r) const;

  std::string descriptor() const;

 private:
  explicit RadialGrid(std::vector<double> breaks);
  std::vector<double> breaks_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

enum class TailClass { compact, rapid };

/// f(r) = regular(r) * (edge - r)^{-exponent} on [0, edge), zero beyond.
struct SingularForm {
  std::function<cplx(double)> regular;
  double edge = 1.0;
  cplx exponent = 0.0;

  cplx operator()(double r) const;
};

class RadialProfile {
 public:
  RadialProfile(GridPtr grid, std::vector<cplx> values, TailClass tail = TailClass::compact);

  /// Samples f at every storage node.
  static RadialProfile sample(GridPtr grid, const std::function<cplx(double)>& f,
                              TailClass tail = TailClass::rapid);
  /// Like sample, but panel endpoints take one-sided limits from inside their panel;
  /// use for functions with jumps at breakpoints.
  static RadialProfile sample_piecewise(GridPtr grid, const std::function<cplx(double)>& f,
                                        TailClass tail = TailClass::compact);
  /// Profile carrying an exact singular form; node values are sampled away from the edge.
  static RadialProfile from_singular(GridPtr grid, SingularForm form);
  static RadialProfile zero(GridPtr grid);

  cplx operator()(double r) const;

  const GridPtr& grid() const { return grid_; }
  const std::vector<cplx>& values() const { return values_; }
  TailClass tail() const { return tail_; }
  const std::optional<SingularForm>& singular() const { return singular_; }

  std::vector<cplx> unique_values() const;

  RadialProfile operator+(const RadialProfile& o) const;
  RadialProfile operator-(const RadialProfile& o) const;
  RadialProfile operator*(cplx a) const;

 private:
  GridPtr grid_;
  std::vector<cplx> values_;
  TailClass tail_;
  std::optional<SingularForm> singular_;
};

/// Radial reduction of w_k(x) dx: r^{2 nu + 1} dr, angular factor set to 1.
struct WeightedMeasure {
  double nu;
  explicit WeightedMeasure(double nu_) : nu(nu_) {}
  explicit WeightedMeasure(const DunklGeometry& g) : nu(g.nu()) {}
  double exponent() const { return 2.0 * nu + 1.0; }
  /// Measure of the shell [a, b].
  double shell(double a, double b) const;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// (int |f|^p r^{2nu+1} dr)^{1/p}; p = kInf gives the sup. Singular profiles return
/// kInf when the singularity is not p-integrable.
double lp_norm(const RadialProfile& f, double p, const WeightedMeasure& mu);

/// sup |f| over nodes and a dense interior sampling of each panel's interpolant.
double sup_norm(const RadialProfile& f);

/// Measure of {r : |f(r)| > s}.
double distribution_function(const RadialProfile& f, double s, const WeightedMeasure& mu);

/// sup_s s * alpha_f(s)^{1/r} over a logarithmic s-grid.
double weak_norm(const RadialProfile& f, double r, const WeightedMeasure& mu);

/// r -> f(lambda r). The result lives on the grid scaled by 1/lambda, so node values are exact.
RadialProfile dilate(const RadialProfile& f, double lambda);

/// d/dr of the panel interpolants (spectral differentiation on each panel).
RadialProfile derivative(const RadialProfile& f);

/// Value at r = 0 extrapolated from the first panel's nodes with r > 0.
cplx extrapolate_to_origin(const RadialProfile& f);

/// Evaluates f at the storage nodes of another grid (zero beyond f's support).
RadialProfile resample(const RadialProfile& f, GridPtr grid);

}  // namespace dunkl
