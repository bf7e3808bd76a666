#pragma once

#include <functional>
#include <string>

#include "dunkl/geometry.hpp"
#include "dunkl/radial.hpp"

namespace dunkl {

/// Symbol rho -> m(rho) with its behaviour at rho = 0. A singular symbol is set to 0 at the
/// origin node, which carries zero measure whenever 2 nu + 1 > 0.
struct RadialMultiplier {
  std::function<cplx(double)> symbol;
  bool singular_origin = false;
  cplx origin_value = 0.0;
  std::string note;

  cplx operator()(double rho) const;

  static RadialMultiplier constant(cplx c);
  static RadialMultiplier from_function(std::function<cplx(double)> f, std::string note = {});
};

/// Largest half-panel phase rho * h / 2 accepted by the panel quadrature.
inline constexpr double kMaxPanelPhase = 9.5;

/// Throws ResolutionError if some panel carrying data cannot resolve e^{i rho r} for rho <= rho_max.
void check_resolution(const RadialProfile& f, double rho_max);

/// F f(rho) = int_0^inf f(s) (s rho)^{-nu} J_nu(s rho) s^{2nu+1} ds, sampled on the out grid.
RadialProfile hankel_transform(const RadialProfile& f, double nu, const GridPtr& out);

/// Transform with nu = gamma + n/2 - 1 and output rho-grid equal to the input grid.
RadialProfile hankel_forward(const RadialProfile& f, const DunklGeometry& geom);

/// F^{-1}(m F f); the transform side uses rho_grid, the result lives on out.
RadialProfile apply_radial_multiplier(const RadialProfile& f, const RadialMultiplier& m, double nu,
                                      const GridPtr& rho_grid, const GridPtr& out);
RadialProfile apply_radial_multiplier(const RadialProfile& f, const RadialMultiplier& m,
                                      const DunklGeometry& geom);

/// Multiplies transform-side samples by m.
RadialProfile multiply_symbol(const RadialProfile& transformed, const RadialMultiplier& m);

/// F^{-1}(F f F g) on f's grid.
RadialProfile radial_convolve(const RadialProfile& f, const RadialProfile& g, const DunklGeometry& geom);

/// Drops cached transform plans (mainly for tests and memory-sensitive callers).
void clear_transform_cache();

}  // namespace dunkl
