#include "dunkl/multipliers.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {
namespace {

double support_radius(const RadialProfile& f) {
  double fmax = 0.0;
  for (const cplx& v : f.values()) fmax = std::max(fmax, std::abs(v));
  if (fmax == 0.0) return 0.0;
  const auto& nodes = f.grid()->nodes();
  for (std::size_t i = nodes.size(); i-- > 0;)
    if (std::abs(f.values()[i]) > 1e-14 * fmax) return nodes[i];
  return 0.0;
}

void check_order_window(cplx z, double lo, double hi, const char* what) {
  if (z.real() < lo - 1e-12 || z.real() > hi + 1e-12) {
    std::ostringstream os;
    os << what << ": Re z = " << z.real() << " outside [" << lo << ", " << hi << "]";
    throw DomainError(os.str());
  }
}

}  // namespace

GridPtr default_grid() {
  static std::once_flag once;
  static GridPtr grid;
  std::call_once(once, [] { grid = RadialGrid::build(64.0, 4096)->with_break(1.0); });
  return grid;
}

RadialProfile phi_z(cplx z, const DunklGeometry& geom, const GridPtr& grid) {
  (void)geom;
  if (z.real() >= 1.0) throw DomainError("phi_z: Re z must be < 1");
  if (z == cplx(0.0)) {
    auto g = grid->with_break(1.0);
    return RadialProfile::sample_piecewise(g, [](double r) { return r < 1.0 ? 1.0 : 0.0; });
  }
  const cplx c = std::exp(z * std::log(2.0)) / gamma_complex(1.0 - z);
  SingularForm form;
  form.regular = [c, z](double r) { return c * std::exp(-z * std::log1p(r)); };
  form.edge = 1.0;
  form.exponent = z;
  return RadialProfile::from_singular(grid, std::move(form));
}

RadialProfile phi_z(cplx z, const DunklGeometry& geom) { return phi_z(z, geom, default_grid()); }

RadialMultiplier multiplier_m_z(cplx z, const DunklGeometry& geom) {
  const cplx order = geom.gamma() + 0.5 * geom.n() - z;
  if (order.real() < -0.5 - 1e-12)
    throw DomainError("multiplier_m_z: Bessel order gamma + n/2 - z has real part below -1/2");
  if (std::abs(order.imag()) > 64.0) throw DomainError("multiplier_m_z: |Im z| outside the envelope 64");
  RadialMultiplier m;
  if (order.imag() == 0.0) {
    const double a = order.real();
    m.symbol = [a](double rho) -> cplx { return scaled_bessel(a, rho); };
  } else {
    m.symbol = [order](double rho) { return scaled_bessel(order, rho); };
  }
  m.origin_value = std::exp(-order * std::log(2.0) - log_gamma(order + 1.0));
  m.note = "m_z";
  return m;
}

RadialProfile s_z_apply(cplx z, const RadialProfile& f, const DunklGeometry& geom) {
  check_order_window(z, 0.0, geom.gamma() + 0.5 * (geom.n() + 1), "s_z_apply");
  return apply_radial_multiplier(f, multiplier_m_z(z, geom), geom);
}

RadialProfile t_z_apply(cplx z, const RadialProfile& f, const DunklGeometry& geom) {
  if (z.real() < 0.0 || z.real() >= 1.0) throw DomainError("t_z_apply: Re z must lie in [0, 1)");
  return radial_convolve(f, phi_z(z, geom, f.grid()), geom);
}

double cutoff_psi(double rho) {
  auto h = [](double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; };
  if (rho <= 1.0) return 0.0;
  if (rho >= 2.0) return 1.0;
  const double a = h(rho - 1.0), b = h(2.0 - rho);
  return a / (a + b);
}

RadialMultiplier wave_sine_multiplier(double t) {
  RadialMultiplier m;
  m.symbol = [t](double rho) -> cplx { return std::sin(t * rho) / rho; };
  m.origin_value = t;
  m.note = "sin(t rho)/rho";
  return m;
}

RadialMultiplier wave_cosine_multiplier(double t) {
  RadialMultiplier m;
  m.symbol = [t](double rho) -> cplx { return std::cos(t * rho); };
  m.origin_value = 1.0;
  m.note = "cos(t rho)";
  return m;
}

RadialProfile wave_propagate(const WaveState& s, const GridPtr& rho_grid, const GridPtr& out) {
  if (!std::isfinite(s.t)) throw ArgumentError("wave_propagate: t must be finite");
  const double reach = std::max(support_radius(s.f), support_radius(s.g)) + std::abs(s.t);
  if (reach > out->r_max()) {
    std::ostringstream os;
    os << "wave_propagate: data support plus |t| = " << reach << " exceeds the grid radius " << out->r_max();
    throw ResolutionError(os.str());
  }
  const double nu = s.geom.nu();
  const RadialProfile ff = hankel_transform(s.f, nu, rho_grid);
  const RadialProfile fg = hankel_transform(s.g, nu, rho_grid);
  const RadialProfile spec =
      multiply_symbol(ff, wave_sine_multiplier(s.t)) + multiply_symbol(fg, wave_cosine_multiplier(s.t));
  return hankel_transform(spec, nu, out);
}

RadialProfile wave_propagate(const WaveState& s) { return wave_propagate(s, s.f.grid(), s.f.grid()); }

RadialProfile wave_velocity(const WaveState& s) {
  const double nu = s.geom.nu(), t = s.t;
  const auto& grid = s.f.grid();
  const RadialProfile ff = hankel_transform(s.f, nu, grid);
  const RadialProfile fg = hankel_transform(s.g, nu, grid);
  RadialMultiplier damp;
  damp.symbol = [t](double rho) -> cplx { return -rho * std::sin(t * rho); };
  damp.origin_value = 0.0;
  const RadialProfile spec = multiply_symbol(ff, wave_cosine_multiplier(t)) + multiply_symbol(fg, damp);
  return hankel_transform(spec, nu, grid);
}

Rank1Function wave_propagate_rank1(const Rank1Function& f, const Rank1Function& g, double t) {
  if (f.k() != g.k()) throw ArgumentError("wave_propagate_rank1: f and g need the same multiplicity");
  return apply_radial_multiplier_rank1(f, wave_sine_multiplier(t)) +
         apply_radial_multiplier_rank1(g, wave_cosine_multiplier(t));
}

CosPart cos_part_from_string(const std::string& s) {
  if (s == "full") return CosPart::full;
  if (s == "low") return CosPart::low;
  if (s == "high") return CosPart::high;
  throw ArgumentError("unknown cos-multiplier part '" + s + "'");
}

RadialMultiplier cos_multiplier(CosPart part) {
  RadialMultiplier m;
  switch (part) {
    case CosPart::full:
      m.symbol = [](double rho) -> cplx { return std::cos(rho) / rho; };
      m.singular_origin = true;
      m.note = "cos(rho)/rho";
      break;
    case CosPart::low:
      m.symbol = [](double rho) -> cplx { return (1.0 - cutoff_psi(rho)) * std::cos(rho) / rho; };
      m.singular_origin = true;
      m.note = "(1-psi) cos(rho)/rho";
      break;
    case CosPart::high:
      m.symbol = [](double rho) -> cplx { return cutoff_psi(rho) * std::cos(rho) / rho; };
      m.origin_value = 0.0;
      m.note = "psi cos(rho)/rho";
      break;
  }
  return m;
}

RadialProfile cos_multiplier_apply(const RadialProfile& f, CosPart part, const DunklGeometry& geom) {
  const RadialMultiplier m = cos_multiplier(part);
  if (m.singular_origin && 2.0 * geom.nu() + 1.0 <= 0.0)
    throw DomainError("cos multiplier: 1/rho is not integrable against rho^{2nu+1} when n + 2 gamma = 1");
  return apply_radial_multiplier(f, m, geom);
}

RadialMultiplier a_psi_multiplier() {
  RadialMultiplier m;
  m.symbol = [](double rho) -> cplx { return cutoff_psi(rho) / rho; };
  m.origin_value = 0.0;
  m.note = "psi(rho)/rho";
  return m;
}

RadialProfile a_psi_apply(const RadialProfile& f, const DunklGeometry& geom) {
  return apply_radial_multiplier(f, a_psi_multiplier(), geom);
}

Rank1Multiplier u_z_multiplier(cplx z, double k) {
  check_order_window(z, 0.0, k + 1.0, "u_z");
  if (std::abs(z.imag()) > 64.0) throw DomainError("u_z: |Im z| outside the envelope 64");
  const cplx order = k - 0.5 - z;
  Rank1Multiplier m;
  m.odd.symbol = [order](double rho) -> cplx {
    const double c = cutoff_psi(rho);
    return c == 0.0 ? cplx(0.0) : c / (rho * rho) * scaled_bessel_any_order(order, rho);
  };
  m.odd.origin_value = 0.0;
  m.odd.note = "psi xi |xi|^-2 K(|xi|)";
  return m;
}

Rank1Function u_zj_apply_rank1(cplx z, const Rank1Function& f) {
  return apply_rank1_multiplier(f, u_z_multiplier(z, f.k()));
}

Rank1Function psi_j_profile(double y, double k, const GridPtr& grid) {
  const DunklGeometry geom(1, k);
  RadialProfile odd = phi_z(cplx(0.0, y), geom, grid);
  return Rank1Function(RadialProfile::zero(odd.grid()), odd, k);
}

Rank1Function psi_j_profile(double y, const DunklGeometry& geom) {
  if (geom.n() != 1) throw ArgumentError("psi_j_profile: needs a rank-one geometry (n = 1)");
  return psi_j_profile(y, geom.gamma(), default_grid());
}

}  // namespace dunkl
