#include <algorithm>
#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/harness.hpp"
#include "dunkl/hankel.hpp"
#include "dunkl/multipliers.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

namespace {

std::string geom_text(const DunklGeometry& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " gamma=" << g.gamma();
  return os.str();
}

double max_abs_diff(const RadialProfile& a, const RadialProfile& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) e = std::max(e, std::abs(a.values()[i] - b.values()[i]));
  return e;
}

RadialProfile sample_family(const TestFunction& t, const GridPtr& grid) {
  return RadialProfile::sample(grid, [&](double r) { return cplx(t.f(r)); }, t.tail);
}

}  // namespace

CheckReport check_phi_transform(const std::vector<cplx>& zs, const std::vector<DunklGeometry>& geoms, double rho_max,
                         double tolerance) {
  std::vector<CheckReport> parts;
  for (const auto& g : geoms) {
    for (cplx z : zs) {
      const RadialProfile F = hankel_forward(phi_z(z, g), g);
      const RadialMultiplier m = multiplier_m_z(z, g);
      const double decay = -(g.nu() + 1.0 - z.real()) - 0.5;
      const double m0 = std::abs(m(0.0));
      const auto& nodes = F.grid()->nodes();
      double worst = 0.0;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double rho = nodes[i];
        if (rho > rho_max) break;
        const cplx ref = m(rho);
        const double floor = 1e-6 * m0 * std::pow(1.0 + rho, decay);
        worst = std::max(worst, std::abs(F.values()[i] - ref) / std::max(std::abs(ref), floor));
      }
      std::ostringstream os;
      os << geom_text(g) << " z=" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
      parts.push_back(make_report(os.str(), worst, tolerance, F.grid()->descriptor()));
    }
  }
  return combine_reports("phi-transform", parts);
}

CheckReport check_gaussian_fixed_point(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  const auto f = RadialProfile::sample(grid, [](double r) { return cplx(std::exp(-0.5 * r * r)); });
  const double e = max_abs_diff(hankel_forward(f, geom), f);
  return make_report("gaussian-fixed-point", e, 1e-8, grid->descriptor(), geom_text(geom));
}

CheckReport check_double_transform(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  std::vector<CheckReport> parts;
  for (const auto& t : test_family()) {
    const auto f = sample_family(t, grid);
    const double e = max_abs_diff(hankel_forward(hankel_forward(f, geom), geom), f) / sup_norm(f);
    parts.push_back(make_report(t.id, e, 1e-6, grid->descriptor(), geom_text(geom)));
  }
  return combine_reports("double-transform", parts);
}

CheckReport check_plancherel(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  const WeightedMeasure mu(geom);
  std::vector<CheckReport> parts;
  for (const auto& t : test_family()) {
    const auto f = sample_family(t, grid);
    const double a = lp_norm(f, 2.0, mu);
    const double b = lp_norm(hankel_forward(f, geom), 2.0, mu);
    parts.push_back(make_report(t.id, std::abs(a - b) / a, 1e-6, grid->descriptor(), geom_text(geom)));
  }
  return combine_reports("plancherel", parts);
}

CheckReport check_hausdorff_young(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  const WeightedMeasure mu(geom);
  std::vector<CheckReport> parts;
  for (const auto& t : test_family()) {
    const auto f = sample_family(t, grid);
    const auto F = hankel_forward(f, geom);
    for (double p : {1.2, 1.5, 2.0}) {
      const double ratio = lp_norm(F, p / (p - 1.0), mu) / lp_norm(f, p, mu);
      parts.push_back(make_report(t.id + " p=" + std::to_string(p), ratio, 1.0 + 1e-3, grid->descriptor()));
    }
  }
  return combine_reports("hausdorff-young", parts);
}

CheckReport check_young(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  const WeightedMeasure mu(geom);
  const auto g = RadialProfile::sample(grid, [](double r) { return cplx(std::exp(-0.5 * r * r)); });
  const double g1 = lp_norm(g, 1.0, mu);
  std::vector<CheckReport> parts;
  for (const auto& t : test_family()) {
    const auto f = sample_family(t, grid);
    const auto c = radial_convolve(f, g, geom);
    for (double p : {1.0, 1.5, 2.0, kInf}) {
      const double ratio = lp_norm(c, p, mu) / (g1 * lp_norm(f, p, mu));
      parts.push_back(make_report(t.id + " p=" + std::to_string(p), ratio, 1.0 + 1e-3, grid->descriptor()));
    }
  }
  return combine_reports("young", parts);
}

CheckReport check_laplacian_eigen(const DunklGeometry& geom) {
  const GridPtr grid = default_grid();
  std::vector<CheckReport> parts;
  const double c = 2.0 * geom.nu() + 1.0;
  for (const auto& t : test_family()) {
    if (t.tail == TailClass::compact) continue;
    const auto f = sample_family(t, grid);
    const auto d1 = derivative(f);
    const auto d2 = derivative(d1);
    const auto& nodes = grid->nodes();
    std::vector<cplx> lap(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      lap[i] = nodes[i] > 0.0 ? d2.values()[i] + c * d1.values()[i] / nodes[i] : (1.0 + c) * d2.values()[i];
    }
    const auto lhs = hankel_forward(RadialProfile(grid, lap, t.tail), geom);
    const auto F = hankel_forward(f, geom);
    double e = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const cplx rhs = -nodes[i] * nodes[i] * F.values()[i];
      e = std::max(e, std::abs(lhs.values()[i] - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    parts.push_back(make_report(t.id, e / scale, 1e-6, grid->descriptor(), geom_text(geom)));
  }
  return combine_reports("laplacian-eigen", parts);
}

std::vector<CheckReport> check_transform_identities(const DunklGeometry& geom) {
  std::vector<CheckReport> out{check_gaussian_fixed_point(geom), check_double_transform(geom), check_plancherel(geom),
                               check_hausdorff_young(geom), check_young(geom), check_laplacian_eigen(geom)};
  for (auto& r : out) r.name += " [" + geom_text(geom) + "]";
  return out;
}

CheckReport check_sonine(cplx mu, cplx nu_s, const std::vector<double>& t_grid) {
  if (!(mu.real() >= -0.5)) throw DomainError("sonine: Re mu must be >= -1/2");
  if (!(nu_s.real() > -1.0)) throw DomainError("sonine: Re nu must be > -1");
  const cplx a = mu + nu_s + 1.0;
  const cplx norm = std::pow(2.0, -nu_s) / gamma_complex(nu_s + 1.0);
  double worst = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("sonine: t must be positive");
    // J_{mu+nu+1}(t) = t^{nu+1} 2^{-nu}/Gamma(nu+1) int_0^1 J_mu(ts) s^{mu+1} (1-s^2)^nu ds
    // Both endpoints are algebraic: s^{2mu+1} at 0 and (1-s)^nu at 1, so split at 1/2.
    const quad::SingularOptions opts{std::min(0.25, 2.0 / t), 16};
    auto near0 = [&](double v) -> cplx {
      const double s = -v;
      return scaled_bessel(mu, t * s) * std::pow(1.0 - s * s, nu_s);
    };
    auto near1 = [&](double s) -> cplx {
      return scaled_bessel(mu, t * s) * std::pow(s, 2.0 * mu + 1.0) * std::pow(1.0 + s, nu_s);
    };
    const cplx integral = quad::integrate_to_singular_edge(near0, -0.5, 0.0, -(2.0 * mu + 1.0), opts) +
                          quad::integrate_to_singular_edge(near1, 0.5, 1.0, -nu_s, opts);
    const cplx rhs = std::pow(t, nu_s + 1.0) * norm * std::pow(t, mu) * integral;
    const cplx lhs = std::pow(t, a) * scaled_bessel(a, t);
    worst = std::max(worst, std::abs(lhs - rhs) * std::sqrt(1.0 + t));
  }
  std::ostringstream os;
  os << "mu=" << mu << " nu=" << nu_s;
  return make_report("sonine", worst, 1e-8, "", os.str());
}

CheckReport check_sonine_grid() {
  const std::vector<double> ts{0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  std::vector<CheckReport> parts;
  for (cplx mu : {cplx(-0.5), cplx(0.0), cplx(0.5), cplx(1.75), cplx(0.3, 2.0)}) {
    for (cplx nu : {cplx(-0.4), cplx(0.0), cplx(0.5), cplx(1.25), cplx(0.2, -1.0)}) {
      parts.push_back(check_sonine(mu, nu, ts));
    }
  }
  return combine_reports("sonine", parts);
}

CheckReport check_bessel_recurrence() {
  double worst = 0.0;
  for (double nu = 0.5; nu <= 6.0 + 1e-12; nu += 0.25) {
    for (int i = 0; i <= 400; ++i) {
      const double t = 0.1 * std::pow(1000.0, i / 400.0);
      const double lhs = bessel_j(nu + 1.0, t);
      const double rhs = 2.0 * nu / t * bessel_j(nu, t) - bessel_j(nu - 1.0, t);
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
  }
  return make_report("bessel-recurrence", worst, 1e-9, "", "nu in [1/2, 6], t in [0.1, 100]");
}

CheckReport check_bessel_derivative() {
  double worst = 0.0;
  const double h = 1e-4;
  for (double nu : {-0.5, 0.0, 0.75, 1.5, 3.7}) {
    for (int i = 0; i <= 200; ++i) {
      const double t = 0.1 + 0.25 * i;
      const double fd = (scaled_bessel(nu, t + h) - scaled_bessel(nu, t - h)) / (2.0 * h);
      const double exact = -t * scaled_bessel(nu + 1.0, t);
      worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
    }
  }
  return make_report("bessel-derivative", worst, 1e-6, "", "central difference h=1e-4");
}

CheckReport check_gamma_reflection() {
  double worst = 0.0;
  for (int i = 1; i <= 300; ++i) {
    const double y = 0.1 * i;
    const double inv2 = std::pow(std::abs(gamma_complex(cplx(1.0, -y))), -2.0);
    worst = std::max(worst, std::abs(inv2 * M_PI * y / std::sinh(M_PI * y) - 1.0));
  }
  return make_report("gamma-reflection", worst, 1e-10, "", "y in (0, 30]");
}

CheckReport check_bessel_decay_slope() {
  const std::vector<double> etas{-0.5, 0.0, 1.0, 3.0};
  const int nz = 21;
  const int nt = 2001;
  std::vector<double> sup(etas.size() * nz, 0.0);
  parallel_for(sup.size(), [&](std::size_t idx) {
    const double eta = etas[idx / nz];
    const double zeta = 0.5 * static_cast<double>(idx % nz);
    double s = 0.0;
    for (int i = 0; i < nt; ++i) {
      const double t = 200.0 * i / (nt - 1);
      s = std::max(s, std::pow(1.0 + t, eta + 0.5) * std::abs(scaled_bessel(cplx(eta, zeta), t)));
    }
    sup[idx] = s;
  });
  double worst_slope = -kInf;
  std::ostringstream os;
  for (std::size_t e = 0; e < etas.size(); ++e) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int j = 0; j < nz; ++j) {
      const double x = 0.5 * j;
      const double y = std::log(sup[e * nz + j]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double b = (nz * sxy - sx * sy) / (nz * sxx - sx * sx);
    worst_slope = std::max(worst_slope, b);
    os << (e ? "; " : "") << "eta=" << etas[e] << " slope=" << b;
  }
  return make_report("bessel-decay-slope", worst_slope, M_PI / 2.0 + 0.1, "", os.str());
}

}  // namespace dunkl
