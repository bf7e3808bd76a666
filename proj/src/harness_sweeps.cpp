#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "dunkl/errors.hpp"
#include "dunkl/harness.hpp"
#include "dunkl/hankel.hpp"
#include "dunkl/multipliers.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

namespace {

constexpr int kLambdaExp = 8;
constexpr int kInnerExp = 6;
constexpr double kRhoMax = 10.0;

double conj_exp(double p) { return p / (p - 1.0); }

/// Transform-side grid on [0, 10] fine enough for outputs on [0, r_max], with geometric
/// refinement above a symbol scale a (ignored when a <= 0).
GridPtr rho_grid_for(double r_max, double a) {
  const double h = std::min(0.25, 14.0 / r_max);
  std::vector<double> extra;
  if (a > 0.0 && a < kRhoMax) {
    extra.push_back(a);
    extra.push_back(1.5 * a);
    for (double b = 2.0 * a; b < kRhoMax && b < 2.0 * h; b *= 2.0) extra.push_back(b);
  }
  return RadialGrid::with_spacing(kRhoMax, h, extra);
}

GridPtr r_grid_for(double r_max) { return RadialGrid::with_spacing(r_max, 1.0); }

struct RowKey {
  double p, q, t;
  std::string family;
  bool operator<(const RowKey& o) const { return std::tie(p, q, t, family) < std::tie(o.p, o.q, o.t, o.family); }
};

/// Saturation and growth per (p, q, t) group, sup taken over families.
void summarize(SweepResult& s) {
  std::map<std::tuple<double, double, double>, std::pair<double, double>> sups;
  std::map<RowKey, std::pair<double, double>> ends;  // ratio at 2^4 and 2^8
  for (const auto& r : s.rows) {
    const int e = static_cast<int>(std::lround(std::log2(r.lambda)));
    auto& g = sups[{r.p, r.q, r.t}];
    if (std::abs(e) <= kInnerExp) g.first = std::max(g.first, r.ratio);
    g.second = std::max(g.second, r.ratio);
    auto& en = ends[{r.p, r.q, r.t, r.family}];
    if (e == 4) en.first = r.ratio;
    if (e == kLambdaExp) en.second = r.ratio;
  }
  s.saturation = 0.0;
  for (const auto& [k, v] : sups) {
    const double sat = v.first > 0.0 ? (v.second - v.first) / v.first : kInf;
    s.saturation = std::max(s.saturation, sat);
  }
  s.growth = 0.0;
  for (const auto& [k, v] : ends) {
    if (v.first > 0.0) s.growth = std::max(s.growth, v.second / v.first);
  }
  s.verdict = s.saturation < 0.05 ? Verdict::bounded : Verdict::growing;
}

double lambda_of(int e) { return std::ldexp(1.0, e); }

/// Primal and dual ratio rows for T_m f_lambda, using
/// ||T_m f_lambda||_q / ||f_lambda||_p = lambda^{D/p - D/q} ||T_{m(lambda .)} f||_q / ||f||_p.
void push_ratios(SweepResult& s, const RadialProfile& f, const RadialProfile& out, const WeightedMeasure& mu,
                 double d, double p, double q, double lambda, double t, bool dual) {
  auto ratio = [&](double a, double b) {
    return std::pow(lambda, d / a - d / b) * lp_norm(out, b, mu) / lp_norm(f, a, mu);
  };
  s.rows.push_back({p, q, "gaussian", lambda, t, ratio(p, q)});
  if (dual) s.rows.push_back({p, q, "gaussian-dual", lambda, t, ratio(conj_exp(q), conj_exp(p))});
}

/// Ratios of a real radial multiplier m(lambda rho) against dilated Gaussians; reach(lambda) bounds
/// the output support beyond the data.
SweepResult radial_sweep(const std::vector<std::pair<double, double>>& pqs, double t,
                         const std::function<RadialMultiplier(double)>& symbol_at,
                         const std::function<double(double)>& reach, const std::function<double(double)>& scale,
                         const DunklGeometry& geom, bool dual) {
  SweepResult s;
  const WeightedMeasure mu(geom);
  const double d = geom.dim();
  for (int e = -kLambdaExp; e <= kLambdaExp; ++e) {
    const double lambda = lambda_of(e);
    const double r_max = std::ceil(reach(lambda) + 12.0);
    const GridPtr rg = r_grid_for(r_max);
    const GridPtr pg = rho_grid_for(r_max, scale(lambda));
    const auto f = RadialProfile::sample(rg, [](double r) { return cplx(std::exp(-0.5 * r * r)); });
    const auto out = apply_radial_multiplier(f, symbol_at(lambda), geom.nu(), pg, rg);
    for (const auto& [p, q] : pqs) push_ratios(s, f, out, mu, d, p, q, lambda, t, dual);
  }
  clear_transform_cache();
  summarize(s);
  return s;
}

double no_scale(double) { return 0.0; }

}  // namespace

SweepResult sweep_s_alpha(double alpha, SAlphaCase c, double p, double q, const DunklGeometry& geom, bool expect_growth) {
  const ExponentPair pair(p, q);
  if (!s_alpha_case_holds(c, alpha, pair, geom) && !expect_growth) {
    std::ostringstream os;
    os << "sweep_s_alpha: (p, q) = (" << p << ", " << q << ") is not admissible for case " << to_string(c)
       << " at alpha = " << alpha << "; pass expect_growth to probe it";
    throw ArgumentError(os.str());
  }
  const double order = geom.nu() + 1.0 - alpha;
  if (order < -0.5) throw DomainError("sweep_s_alpha: alpha > gamma + (n+1)/2");
  auto symbol_at = [order](double lambda) {
    RadialMultiplier m;
    m.symbol = [order, lambda](double rho) { return cplx(scaled_bessel(order, lambda * rho)); };
    m.origin_value = scaled_bessel(order, 0.0);
    return m;
  };
  return radial_sweep({{p, q}}, 1.0, symbol_at, [](double l) { return l; }, no_scale, geom, true);
}

SweepResult sweep_wave_estimate(const std::vector<double>& ps, WaveLine line, const std::vector<double>& ts,
                                const DunklGeometry& geom) {
  const PInterval iv = line == WaveLine::q1 ? line_q1_interval(geom) : line_q2_interval(geom);
  SweepResult all;
  if (iv.empty) {
    all.verdict = Verdict::bounded;
    return all;
  }
  std::vector<std::pair<double, double>> pqs;
  for (double p : ps) pqs.emplace_back(p, line == WaveLine::q1 ? line_q1(p, geom) : line_q2(p, geom));
  for (double t : ts) {
    if (!(t > 0.0)) throw ArgumentError("sweep_wave_estimate: t must be positive");
    auto symbol_at = [t](double lambda) {
      const double tt = lambda * t;
      RadialMultiplier m;
      m.symbol = [tt, lambda](double rho) {
        const double x = tt * rho;
        return cplx(x == 0.0 ? tt / lambda : std::sin(x) / (lambda * rho));
      };
      m.origin_value = t;
      return m;
    };
    auto s = radial_sweep(pqs, t, symbol_at, [t](double l) { return l * t; }, no_scale, geom, true);
    all.rows.insert(all.rows.end(), s.rows.begin(), s.rows.end());
  }
  summarize(all);
  return all;
}

SweepResult sweep_wave_rank1(const std::vector<double>& ps, WaveLine line, const std::vector<double>& ts, double k) {
  const DunklGeometry geom(1, k);
  const PInterval iv = line == WaveLine::q1 ? line_q1_interval(geom) : line_q2_interval(geom);
  SweepResult s;
  if (iv.empty) {
    s.verdict = Verdict::bounded;
    return s;
  }
  const double d = geom.dim();
  auto fdata = [](double x) { return cplx((1.0 + x) * std::exp(-0.5 * x * x)); };
  auto gdata = [](double x) { return cplx((1.0 - 0.5 * x + x * x) * std::exp(-0.5 * x * x)); };
  const GridPtr base = RadialGrid::with_spacing(16.0, 0.25);
  const auto g0 = Rank1Function::sample(base, gdata, k);
  const auto dg = dunkl_derivative_rank1(g0);
  const auto f0 = Rank1Function::sample(base, fdata, k);
  auto apply = [k](const Rank1Function& h, const RadialMultiplier& m, const GridPtr& pg, const GridPtr& rg) {
    return Rank1Function(apply_radial_multiplier(h.even(), m, k - 0.5, pg, rg),
                         apply_radial_multiplier(h.odd_radial(), m, k + 0.5, pg, rg), k);
  };
  for (double t : ts) {
    if (!(t > 0.0)) throw ArgumentError("sweep_wave_rank1: t must be positive");
    for (int e = -kLambdaExp; e <= kLambdaExp; ++e) {
      const double lambda = lambda_of(e);
      const double tt = lambda * t;
      const double r_max = std::ceil(tt + 12.0);
      const GridPtr rg = r_grid_for(r_max);
      const GridPtr pg = rho_grid_for(r_max, 0.0);
      const auto f = Rank1Function::sample(rg, fdata, k);
      const auto g = Rank1Function::sample(rg, gdata, k);
      const auto u = apply(f, wave_sine_multiplier(tt), pg, rg) * (1.0 / lambda) +
                     apply(g, wave_cosine_multiplier(tt), pg, rg);
      for (double p : ps) {
        const double q = line == WaveLine::q1 ? line_q1(p, geom) : line_q2(p, geom);
        const double denom = lp_norm_rank1(f0, p) + lambda * lp_norm_rank1(dg, p);
        const double ratio = std::pow(lambda, d / p - d / q) * lp_norm_rank1(u, q) / denom;
        s.rows.push_back({p, q, "mixed", lambda, t, ratio});
      }
    }
    clear_transform_cache();
  }
  summarize(s);
  return s;
}

CheckReport check_hl_multiplier(double t_exp, const DunklGeometry& geom, double p) {
  const double d = geom.dim();
  if (!(t_exp > 0.0) || !(t_exp < d)) throw RangeError("hl_multiplier: need 0 < t < n + 2 gamma");
  const double inv_q = 1.0 / p - t_exp / d;
  if (!(inv_q > 0.0) || !(inv_q < 1.0)) throw RangeError("hl_multiplier: q outside (1, inf)");
  const double q = 1.0 / inv_q;
  if (!(p <= 2.0 + kExponentTol) || !(q >= 2.0 - kExponentTol)) throw RangeError("hl_multiplier: need p <= 2 <= q");
  auto symbol_at = [t_exp](double lambda) {
    RadialMultiplier m;
    m.symbol = [t_exp, lambda](double rho) { return cplx(std::min(1.0, std::pow(lambda * rho, -t_exp))); };
    m.origin_value = 1.0;
    return m;
  };
  const double q_probe = 1.0 / (inv_q - 0.1);
  const auto s = radial_sweep({{p, q}}, 0.0, symbol_at, [](double) { return 12.0; },
                              [](double l) { return 1.0 / l; }, geom, false);
  const auto probe = radial_sweep({{p, q_probe}}, 0.0, symbol_at, [](double) { return 12.0; },
                                  [](double l) { return 1.0 / l; }, geom, false);
  std::ostringstream os;
  os << "n=" << geom.n() << " gamma=" << geom.gamma() << " t=" << t_exp << " p=" << p << " q=" << q
     << " verdict " << to_string(s.verdict) << "; probe q=" << q_probe << " growth " << probe.growth;
  auto r = make_report("hl-multiplier", s.saturation, 0.05, "", os.str());
  r.pass = r.pass && probe.verdict == Verdict::growing && probe.growth >= 2.0;
  return r;
}

CheckReport check_apsi(const DunklGeometry& geom, double p) {
  if (geom.n() != 1) throw ArgumentError("apsi: needs a rank-one geometry (n = 1)");
  const double d = geom.dim();
  if (!(p > d)) throw RangeError("apsi: p must exceed n + 2 gamma");
  const double k = geom.gamma();
  auto fdata = [](double x) { return cplx((1.0 + x) * std::exp(-0.5 * x * x)); };
  SweepResult s;
  for (int e = -kLambdaExp; e <= kLambdaExp; ++e) {
    const double lambda = lambda_of(e);
    const GridPtr rg = r_grid_for(12.0);
    const GridPtr pg = rho_grid_for(12.0, 1.0 / lambda);
    RadialMultiplier m;
    m.symbol = [lambda](double rho) {
      const double x = lambda * rho;
      const double c = cutoff_psi(x);
      return cplx(c == 0.0 ? 0.0 : c / x);
    };
    const auto f = Rank1Function::sample(rg, fdata, k);
    const Rank1Function out(apply_radial_multiplier(f.even(), m, k - 0.5, pg, rg),
                            apply_radial_multiplier(f.odd_radial(), m, k + 0.5, pg, rg), k);
    // ||A f_lambda||_inf / ||f_lambda||_p = lambda^{D/p} ||T_{m(lambda .)} f||_inf / ||f||_p
    const double ratio = std::pow(lambda, d / p) * lp_norm_rank1(out, kInf) / lp_norm_rank1(f, p);
    s.rows.push_back({p, kInf, "gaussian", lambda, 0.0, ratio});
  }
  clear_transform_cache();
  summarize(s);
  std::ostringstream os;
  os << "k=" << k << " p=" << p << " verdict " << to_string(s.verdict);
  return make_report("a-psi", s.saturation, 0.05, "", os.str());
}

CheckReport check_apsi(const DunklGeometry& geom) { return check_apsi(geom, geom.dim() + 0.5); }

}  // namespace dunkl
