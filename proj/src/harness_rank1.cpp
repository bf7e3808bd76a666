#include <algorithm>
#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/harness.hpp"
#include "dunkl/multipliers.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

namespace {

const cplx kI(0.0, 1.0);

std::string kdesc(double k) {
  std::ostringstream os;
  os << " [k=" << k << "]";
  return os.str();
}

cplx skewed_gaussian(double x, double s) {
  const double u = x / s;
  return (1.0 + u) * std::exp(-0.5 * u * u);
}

Rank1Function skewed(const GridPtr& grid, double k, double s = 1.0) {
  return Rank1Function::sample(grid, [s](double x) { return skewed_gaussian(x, s); }, k);
}

/// Max over both half-lines of |a - b|.
double max_diff(const Rank1Function& a, const Rank1Function& b) {
  double e = 0.0;
  const auto& nodes = a.grid()->nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double r = nodes[i];
    const cplx ae = a.even().values()[i], ao = a.odd_radial().values()[i];
    const cplx be = b.even().values()[i], bo = b.odd_radial().values()[i];
    e = std::max(e, std::abs((ae + r * ao) - (be + r * bo)));
    e = std::max(e, std::abs((ae - r * ao) - (be - r * bo)));
  }
  return e;
}

}  // namespace

CheckReport check_rank1_eigen(double k) {
  const GridPtr grid = default_grid();
  const auto f = skewed(grid, k);
  const auto lhs = dunkl_transform_rank1(dunkl_derivative_rank1(f));
  const auto F = dunkl_transform_rank1(f);
  // i xi (F_e + xi F_o) = i xi^2 F_o + xi (i F_e)
  const auto& nodes = grid->nodes();
  std::vector<cplx> e(nodes.size()), o(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    e[i] = kI * nodes[i] * nodes[i] * F.odd_radial().values()[i];
    o[i] = kI * F.even().values()[i];
  }
  const Rank1Function rhs(RadialProfile(grid, e), RadialProfile(grid, o), k);
  const double scale = lp_norm_rank1(rhs, kInf);
  return make_report("rank1-eigen" + kdesc(k), max_diff(lhs, rhs) / scale, 1e-6, grid->descriptor());
}

CheckReport check_kernel_ode(double k) {
  const GridPtr grid = RadialGrid::with_spacing(16.0, 0.25);
  double worst = 0.0;
  for (double xi : {0.5, 2.0, 5.0}) {
    const auto E = Rank1Function::sample(grid, [&](double x) { return dunkl_kernel_rank1(x, xi, k); }, k);
    const auto DE = dunkl_derivative_rank1(E);
    worst = std::max(worst, max_diff(DE, E * (kI * xi)) / std::max(1.0, xi));
  }
  return make_report("kernel-ode" + kdesc(k), worst, 1e-7, grid->descriptor(), "xi in {0.5, 2, 5}");
}

CheckReport check_kernel_series(double k) {
  double worst = 0.0;
  for (double xi : {0.25, 1.0, 2.0}) {
    for (int i = -400; i <= 400; ++i) {
      const double x = 0.025 * i;
      if (std::abs(x * xi) > 20.0) continue;
      worst = std::max(worst, std::abs(dunkl_kernel_rank1(x, xi, k) - oracle::dunkl_kernel_series(x, xi, k)));
    }
  }
  return make_report("kernel-series" + kdesc(k), worst, 1e-9, "", "|x xi| <= 20");
}

CheckReport check_riesz_square(double k) {
  const GridPtr grid = default_grid();
  const auto f = skewed(grid, k);
  const auto rr = riesz_rank1(riesz_rank1(f));
  const double e = max_diff(rr, f * cplx(-1.0)) / lp_norm_rank1(f, kInf);
  return make_report("riesz-square" + kdesc(k), e, 1e-8, grid->descriptor());
}

CheckReport check_riesz_bounded(double k, const std::vector<double>& ps) {
  const GridPtr grid = default_grid();
  std::vector<CheckReport> parts;
  std::vector<double> inner(ps.size(), 0.0), outer(ps.size(), 0.0);
  for (int e = -2; e <= 2; ++e) {
    const double s = std::ldexp(1.0, e);
    const auto f = skewed(grid, k, s);
    const auto rf = riesz_rank1(f);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const double ratio = lp_norm_rank1(rf, ps[j]) / lp_norm_rank1(f, ps[j]);
      if (std::abs(e) <= 1) inner[j] = std::max(inner[j], ratio);
      outer[j] = std::max(outer[j], ratio);
    }
  }
  for (std::size_t j = 0; j < ps.size(); ++j) {
    std::ostringstream os;
    os << "p=" << ps[j] << " sup ratio " << outer[j];
    parts.push_back(make_report(os.str(), (outer[j] - inner[j]) / inner[j], 0.05, grid->descriptor()));
  }
  auto r = combine_reports("riesz-bounded" + kdesc(k), parts);
  return r;
}

CheckReport check_translation_sup(double k) {
  const GridPtr grid = default_grid();
  std::vector<CheckReport> parts;
  for (double s : {0.5, 1.0, 2.0}) {
    const auto f = skewed(grid, k, s);
    const double bound = lp_norm_rank1(dunkl_transform_rank1(f), 1.0);
    for (double x0 : {-3.0, 0.5, 1.0, 7.0}) {
      const double ratio = lp_norm_rank1(dunkl_translate_rank1(f, x0), kInf) / bound;
      std::ostringstream os;
      os << "s=" << s << " x0=" << x0;
      parts.push_back(make_report(os.str(), ratio, 1.0 + 1e-3, grid->descriptor()));
    }
  }
  return combine_reports("translation-sup" + kdesc(k), parts);
}

CheckReport check_translation_contraction(double k) {
  const GridPtr grid = default_grid();
  std::vector<CheckReport> parts;
  for (const auto& t : test_family()) {
    if (t.id == "gauss-2.0") continue;  // translates reach the edge of the grid
    const auto f = Rank1Function::sample(grid, [&](double x) { return cplx(t.f(std::abs(x))); }, k, t.tail);
    for (double x0 : {0.5, 2.0, 5.0}) {
      const auto tf = dunkl_translate_rank1(f, x0);
      for (double p : {1.0, 2.0, kInf}) {
        const double ratio = lp_norm_rank1(tf, p) / lp_norm_rank1(f, p);
        std::ostringstream os;
        os << t.id << " x0=" << x0 << " p=" << p;
        parts.push_back(make_report(os.str(), ratio, 1.0 + 1e-3, grid->descriptor()));
      }
    }
  }
  return combine_reports("translation-contraction" + kdesc(k), parts);
}

CheckReport check_translated_psi_growth(double k, const std::vector<double>& ys) {
  if (ys.size() < 2) throw ArgumentError("translated_psi_growth: need at least two y values");
  const GridPtr grid = default_grid();
  const std::vector<double> x0s{0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
  std::vector<double> sup(ys.size(), 0.0);
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const auto psi = psi_j_profile(ys[j], k, grid);
    const auto spec = std::make_shared<const Rank1Function>(dunkl_transform_rank1(psi));
    auto cached = psi;
    cached.set_spectrum(spec);
    for (double x0 : x0s) sup[j] = std::max(sup[j], lp_norm_rank1(dunkl_translate_rank1(cached, x0), kInf));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool finite = true;
  std::ostringstream os;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    finite = finite && std::isfinite(sup[j]);
    const double y = std::log(sup[j]);
    sx += ys[j];
    sy += y;
    sxx += ys[j] * ys[j];
    sxy += ys[j] * y;
    os << "M(" << ys[j] << ")=" << sup[j] << " ";
  }
  const double n = static_cast<double>(ys.size());
  const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  os << "slope " << b;
  auto r = make_report("translated-psi-growth" + kdesc(k), finite ? b : kInf, M_PI / 2.0 + 0.1, grid->descriptor(), os.str());
  return r;
}

CheckReport check_weak_type_phi_half(const DunklGeometry& geom) {
  const auto phi = phi_z(0.5, geom);
  const WeightedMeasure mu(geom);
  const double c = std::sqrt(2.0 / M_PI);
  double worst = 0.0, sup_num = 0.0, sup_ref = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double s = 0.5 * c * std::pow(10.0, i / 15.0);
    const double a = distribution_function(phi, s, mu);
    const double ref = oracle::phi_half_distribution(s, geom);
    worst = std::max(worst, std::abs(a - ref) / ref);
    sup_num = std::max(sup_num, s * s * a);
    sup_ref = std::max(sup_ref, s * s * ref);
  }
  std::ostringstream os;
  os << "n=" << geom.n() << " gamma=" << geom.gamma() << " sup s^2 alpha " << sup_num << " oracle " << sup_ref;
  return make_report("weak-type-phi-half", worst, 0.05, phi.grid()->descriptor(), os.str());
}

}  // namespace dunkl
