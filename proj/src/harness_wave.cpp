#include <algorithm>
#include <cmath>
#include <sstream>

#include "dunkl/harness.hpp"
#include "dunkl/hankel.hpp"
#include "dunkl/multipliers.hpp"

namespace dunkl {

namespace {

double bump3(double r) {
  const double u = r / 3.0;
  return u >= 1.0 ? 0.0 : std::exp(1.0 - 1.0 / (1.0 - u * u));
}

RadialProfile gaussian(const GridPtr& grid, double a) {
  return RadialProfile::sample(grid, [a](double r) { return cplx(std::exp(-a * r * r)); });
}

/// L^2 norm of u restricted to nodes where keep(r) holds.
double masked_l2(const RadialProfile& u, const WeightedMeasure& mu, const std::function<bool(double)>& keep) {
  std::vector<cplx> v = u.values();
  const auto& nodes = u.grid()->nodes();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!keep(nodes[i])) v[i] = 0.0;
  }
  return lp_norm(RadialProfile(u.grid(), std::move(v)), 2.0, mu);
}

std::string tdesc(double t) {
  std::ostringstream os;
  os << "t=" << t;
  return os.str();
}

}  // namespace

CheckReport check_dalembert() {
  const GridPtr grid = default_grid();
  const DunklGeometry g(1, 0.0);
  const auto f = gaussian(grid, 0.5);
  const auto pos = gaussian(grid, 1.0);
  std::vector<CheckReport> parts;
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto u = wave_propagate({f, pos, t, g});
    double e = 0.0;
    const auto& nodes = grid->nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      e = std::max(e, std::abs(u.values()[i] - oracle::dalembert_gaussian(nodes[i], t)));
    }
    parts.push_back(make_report(tdesc(t), e, 1e-5, grid->descriptor()));
  }
  return combine_reports("dalembert", parts);
}

CheckReport check_spherical_means() {
  const GridPtr grid = default_grid();
  const DunklGeometry g(3, 0.0);
  const auto f = gaussian(grid, 0.5);
  const auto pos = gaussian(grid, 1.0);
  std::vector<CheckReport> parts;
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto u = wave_propagate({f, pos, t, g});
    double e = 0.0;
    const auto& nodes = grid->nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      e = std::max(e, std::abs(u.values()[i] - oracle::spherical_means_gaussian(nodes[i], t)));
    }
    parts.push_back(make_report(tdesc(t), e, 1e-4, grid->descriptor()));
  }
  return combine_reports("spherical-means", parts);
}

CheckReport check_huygens() {
  const GridPtr grid = default_grid();
  const DunklGeometry g(3, 0.0);
  const WeightedMeasure mu(g);
  const auto f = RadialProfile::sample(grid, [](double r) { return cplx(bump3(r)); }, TailClass::compact);
  const auto zero = RadialProfile::zero(grid);
  const double h = grid->max_width();
  const double scale = lp_norm(f, 2.0, mu);
  std::vector<CheckReport> parts;
  for (double t : {4.0, 6.0, 10.0, 20.0}) {
    for (bool velocity : {true, false}) {
      const auto u = velocity ? wave_propagate({f, zero, t, g}) : wave_propagate({zero, f, t, g});
      const double cut = t - 3.0 - 3.0 * h;
      const double inner = masked_l2(u, mu, [cut](double r) { return r < cut; });
      parts.push_back(make_report(tdesc(t) + (velocity ? " velocity" : " position"), inner / scale, 1e-6,
                                  grid->descriptor()));
    }
  }
  return combine_reports("huygens", parts);
}

CheckReport check_finite_speed(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  const WeightedMeasure mu(geom);
  const auto f = RadialProfile::sample(grid, [](double r) { return cplx(bump3(r)); }, TailClass::compact);
  const auto pos = RadialProfile::sample(
      grid, [](double r) { return cplx((1.0 - r * r / 9.0) * bump3(r)); }, TailClass::compact);
  const double h = grid->max_width();
  const double scale = lp_norm(f, 2.0, mu) + lp_norm(pos, 2.0, mu);
  std::vector<CheckReport> parts;
  for (double t : {1.0, 4.0, 10.0, 30.0}) {
    const auto u = wave_propagate({f, pos, t, geom});
    const double cut = 3.0 + t + 3.0 * h;
    const double outer = masked_l2(u, mu, [cut](double r) { return r > cut; });
    parts.push_back(make_report(tdesc(t), outer / scale, 1e-6, grid->descriptor()));
  }
  auto r = combine_reports("finite-speed", parts);
  std::ostringstream os;
  os << " [n=" << geom.n() << " gamma=" << geom.gamma() << "]";
  r.name += os.str();
  return r;
}

CheckReport check_energy(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  const WeightedMeasure mu(geom);
  const auto f = gaussian(grid, 0.5);
  const auto pos = RadialProfile::sample(grid, [](double r) { return cplx(r * r * std::exp(-r * r)); });
  const auto& nodes = grid->nodes();
  auto energy = [&](double t) {
    const WaveState s{f, pos, t, geom};
    const auto Fu = hankel_forward(wave_propagate(s), geom);
    const auto Fv = hankel_forward(wave_velocity(s), geom);
    std::vector<cplx> w(nodes.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = nodes[i] * Fu.values()[i];
    const double a = lp_norm(RadialProfile(grid, std::move(w)), 2.0, mu);
    const double b = lp_norm(Fv, 2.0, mu);
    return a * a + b * b;
  };
  const double e0 = energy(0.0);
  double drift = 0.0;
  for (int i = 1; i <= 16; ++i) drift = std::max(drift, std::abs(energy(0.5 * i) - e0) / e0);
  std::ostringstream os;
  os << " [n=" << geom.n() << " gamma=" << geom.gamma() << "]";
  return make_report("energy" + os.str(), drift, 1e-8, grid->descriptor(), "t in [0, 8]");
}

CheckReport check_wave_s_alpha_identity(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  const GridPtr rho_grid = RadialGrid::with_spacing(24.0, 0.1);
  const auto f = gaussian(grid, 0.5);
  const auto pos = gaussian(grid, 1.0);
  const double a_sine = geom.gamma() + 0.5 * (geom.n() - 1);
  const double a_cos = geom.gamma() + 0.5 * (geom.n() + 1);
  const double c = std::sqrt(M_PI / 2.0);
  // t^{-1} dilation, S_alpha, t dilation: the symbol becomes m_alpha(t rho).
  auto conj = [&](const RadialProfile& h, double alpha, double t) {
    const auto d = dilate(h, t);
    const auto s = apply_radial_multiplier(d, multiplier_m_z(alpha, geom), geom.nu(), rho_grid, d.grid());
    return dilate(s, 1.0 / t);
  };
  std::vector<CheckReport> parts;
  for (double t : {0.5, 1.0, 2.0}) {
    const auto u = wave_propagate({f, pos, t, geom});
    const auto v = conj(f, a_sine, t) * (c * t) + conj(pos, a_cos, t) * c;
    double e = 0.0;
    for (std::size_t i = 0; i < u.values().size(); ++i) e = std::max(e, std::abs(u.values()[i] - v.values()[i]));
    parts.push_back(make_report(tdesc(t), e / sup_norm(u), 1e-6, grid->descriptor()));
  }
  return combine_reports("wave-s-alpha", parts);
}

}  // namespace dunkl
