#pragma once

#include "dunkl/geometry.hpp"
#include "dunkl/hankel.hpp"
#include "dunkl/radial.hpp"
#include "dunkl/rank1.hpp"

namespace dunkl {

/// Default transform grid (r_max = 64, N = 4096, uniform) with a breakpoint at r = 1.
GridPtr default_grid();

/// 2^z / Gamma(1-z) (1 - r^2)^{-z} on [0, 1), zero beyond. Re z < 1.
/// For z = 0 the result is the plain indicator sampled on a grid with a breakpoint at 1;
/// otherwise it carries the exact singular form.
RadialProfile phi_z(cplx z, const DunklGeometry& geom, const GridPtr& grid);
RadialProfile phi_z(cplx z, const DunklGeometry& geom);

/// rho -> rho^{z - gamma - n/2} J_{gamma + n/2 - z}(rho), with origin value 2^{z-gamma-n/2}/Gamma(gamma+n/2-z+1).
RadialMultiplier multiplier_m_z(cplx z, const DunklGeometry& geom);

/// F^{-1}(m_z F f) for 0 <= Re z <= gamma + (n+1)/2.
RadialProfile s_z_apply(cplx z, const RadialProfile& f, const DunklGeometry& geom);

/// Phi_z *_k f for 0 <= Re z < 1.
RadialProfile t_z_apply(cplx z, const RadialProfile& f, const DunklGeometry& geom);

/// Smooth cutoff: 0 for rho <= 1, 1 for rho >= 2, h(rho-1)/(h(rho-1)+h(2-rho)) with h(u) = e^{-1/u}.
double cutoff_psi(double rho);

struct WaveState {
  RadialProfile f;  // initial velocity
  RadialProfile g;  // initial position
  double t;
  DunklGeometry geom;
};

RadialMultiplier wave_sine_multiplier(double t);
RadialMultiplier wave_cosine_multiplier(double t);

/// u(., t) = F^{-1}(sin(t rho)/rho F f + cos(t rho) F g). The rho-grid and output grid default to
/// f's grid. Throws ResolutionError when the data support plus |t| exceeds the grid.
RadialProfile wave_propagate(const WaveState& state);
RadialProfile wave_propagate(const WaveState& state, const GridPtr& rho_grid, const GridPtr& out);

/// Time derivative of the solution, F^{-1}(cos(t rho) F f - rho sin(t rho) F g).
RadialProfile wave_velocity(const WaveState& state);

Rank1Function wave_propagate_rank1(const Rank1Function& f, const Rank1Function& g, double t);

enum class CosPart { full, low, high };

CosPart cos_part_from_string(const std::string& s);

/// cos(rho)/rho times 1, 1 - psi, or psi.
RadialMultiplier cos_multiplier(CosPart part);
RadialProfile cos_multiplier_apply(const RadialProfile& f, CosPart part, const DunklGeometry& geom);

/// psi(rho)/rho.
RadialMultiplier a_psi_multiplier();
RadialProfile a_psi_apply(const RadialProfile& f, const DunklGeometry& geom);

/// Odd symbol xi * psi(|xi|) |xi|^{-2} K_{k-1/2-z}(|xi|) with K_a(t) = t^{-a} J_a(t); 0 <= Re z <= k + 1.
Rank1Multiplier u_z_multiplier(cplx z, double k);
Rank1Function u_zj_apply_rank1(cplx z, const Rank1Function& f);

/// x * Phi_{iy}(x) in rank one with multiplicity k.
Rank1Function psi_j_profile(double y, double k, const GridPtr& grid);
Rank1Function psi_j_profile(double y, const DunklGeometry& geom);

}  // namespace dunkl
