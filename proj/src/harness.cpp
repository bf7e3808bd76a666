#include "dunkl/harness.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

CheckReport make_report(std::string name, double residual, double tolerance, std::string grid, std::string detail) {
  CheckReport r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = std::isfinite(residual) && residual <= tolerance;
  r.grid = std::move(grid);
  r.detail = std::move(detail);
  return r;
}

CheckReport combine_reports(std::string name, const std::vector<CheckReport>& parts) {
  if (parts.empty()) throw ArgumentError("combine_reports: no parts");
  const CheckReport* worst = &parts.front();
  bool pass = true;
  auto score = [](const CheckReport& r) {
    return std::isfinite(r.residual) ? r.residual / r.tolerance : std::numeric_limits<double>::infinity();
  };
  for (const auto& p : parts) {
    pass = pass && p.pass;
    if (score(p) > score(*worst) || (!p.pass && worst->pass)) worst = &p;
  }
  CheckReport r = *worst;
  r.detail = worst->name + (worst->detail.empty() ? "" : ": " + worst->detail);
  r.name = std::move(name);
  r.pass = pass;
  return r;
}

std::vector<TestFunction> test_family() {
  std::vector<TestFunction> fam;
  for (double s : {0.5, 1.0, 2.0}) {
    fam.push_back({"gauss-" + std::to_string(s).substr(0, 3),
                   [s](double r) { return std::exp(-0.5 * r * r / (s * s)); }, TailClass::rapid});
  }
  fam.push_back({"bump-5",
                 [](double r) {
                   const double u = r / 5.0;
                   return u >= 1.0 ? 0.0 : std::exp(2.0 - 2.0 / (1.0 - u * u));
                 },
                 TailClass::compact});
  fam.push_back({"ball-2", [](double r) { return 0.5 * std::erfc((r - 2.0) / 0.25); }, TailClass::rapid});
  return fam;
}

std::vector<DunklGeometry> reference_geometries() {
  return {DunklGeometry(1, 0.0), DunklGeometry(1, 1.0), DunklGeometry(2, 0.5), DunklGeometry(3, 0.0),
          DunklGeometry(3, 1.25)};
}

namespace oracle {

long double scaled_bessel_series(long double a, long double t) {
  // t^{-a} J_a(t) = 2^{-a} sum_m (-t^2/4)^m / (m! Gamma(a+m+1))
  const long double x = -t * t / 4.0L;
  long double term = 1.0L / std::tgamma(a + 1.0L);
  long double sum = term;
  for (int m = 0; m < 400; ++m) {
    term *= x / ((m + 1.0L) * (a + m + 1.0L));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) && m > 4) break;
  }
  return sum * std::pow(2.0L, -a);
}

cplx dunkl_kernel_series(double x, double xi, double k) {
  const long double t = static_cast<long double>(x) * xi;
  auto j = [&](long double a) { return std::tgamma(a + 1.0L) * std::pow(2.0L, a) * scaled_bessel_series(a, t); };
  const long double even = j(k - 0.5L);
  const long double odd = t / (2.0L * k + 1.0L) * j(k + 0.5L);
  return {static_cast<double>(even), static_cast<double>(odd)};
}

double dalembert_gaussian(double x, double t) {
  const double pos = 0.5 * (std::exp(-(x + t) * (x + t)) + std::exp(-(x - t) * (x - t)));
  const double vel =
      0.5 * std::sqrt(M_PI / 2.0) * (std::erf((x + t) / std::sqrt(2.0)) - std::erf((x - t) / std::sqrt(2.0)));
  return pos + vel;
}

double spherical_means_gaussian(double r, double t) {
  auto phi = [](double s) { return std::exp(-0.5 * s * s); };
  auto psi = [](double s) { return std::exp(-s * s); };
  if (r < 1e-9) return t * phi(t) + psi(t) * (1.0 - 2.0 * t * t);
  const double vel = (phi(r - t) - phi(r + t)) / (2.0 * r);
  const double pos = ((r + t) * psi(r + t) + (r - t) * psi(r - t)) / (2.0 * r);
  return vel + pos;
}

double phi_half_distribution(double s, const DunklGeometry& geom) {
  const double c = std::sqrt(2.0 / M_PI);
  const double d = geom.dim();
  if (s < c) return 1.0 / d;
  return (1.0 - std::pow(1.0 - c * c / (s * s), 0.5 * d)) / d;
}

}  // namespace oracle

std::string to_string(Verdict v) { return v == Verdict::bounded ? "bounded" : "growing"; }

std::string to_string(WaveLine l) { return l == WaveLine::q1 ? "q1" : "q2"; }

WaveLine wave_line_from_string(const std::string& s) {
  if (s == "q1") return WaveLine::q1;
  if (s == "q2") return WaveLine::q2;
  throw ArgumentError("unknown wave line '" + s + "'");
}

std::vector<std::string> suite_names() { return {"identities", "bessel", "transform", "wave", "rank1", "multipliers", "sweeps", "all"}; }

namespace {

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

std::vector<CheckReport> suite_bessel() {
  return {check_bessel_recurrence(), check_bessel_derivative(), check_gamma_reflection(), check_bessel_decay_slope(),
          check_sonine_grid()};
}

std::vector<CheckReport> suite_transform() {
  std::vector<CheckReport> out;
  out.push_back(check_phi_transform({0.0, 0.3, 0.7, cplx(0.3, 5.0), cplx(0.9, -3.0)}, reference_geometries()));
  for (const auto& g : reference_geometries()) append(out, check_transform_identities(g));
  return out;
}

std::vector<CheckReport> suite_wave() {
  std::vector<CheckReport> out{check_dalembert(), check_spherical_means(), check_huygens()};
  for (const auto& g : {DunklGeometry(1, 1.0), DunklGeometry(3, 1.0)}) out.push_back(check_finite_speed(g));
  for (const auto& g : {DunklGeometry(1, 0.0), DunklGeometry(3, 1.25)}) out.push_back(check_energy(g));
  out.push_back(check_wave_s_alpha_identity(DunklGeometry(3, 0.0)));
  return out;
}

std::vector<CheckReport> suite_rank1() {
  std::vector<CheckReport> out;
  for (double k : {0.0, 1.0}) {
    out.push_back(check_rank1_eigen(k));
    out.push_back(check_kernel_ode(k));
    out.push_back(check_kernel_series(k));
    out.push_back(check_riesz_square(k));
    out.push_back(check_translation_sup(k));
    out.push_back(check_translation_contraction(k));
  }
  out.push_back(check_riesz_bounded(1.0, {1.5, 2.0, 3.0}));
  out.push_back(check_translated_psi_growth(1.0, {0, 1, 2, 3, 4, 5, 6}));
  return out;
}

std::vector<CheckReport> suite_multipliers() {
  std::vector<CheckReport> out;
  for (const auto& g : {DunklGeometry(1, 0.0), DunklGeometry(3, 0.0), DunklGeometry(3, 1.25)}) {
    out.push_back(check_weak_type_phi_half(g));
  }
  out.push_back(check_hl_multiplier(1.0, DunklGeometry(3, 0.0), 1.5));
  out.push_back(check_apsi(DunklGeometry(1, 1.0)));
  return out;
}

CheckReport sweep_report(const std::string& name, const SweepResult& s) {
  return make_report(name, s.saturation, 0.05, "", "verdict " + to_string(s.verdict));
}

std::vector<CheckReport> suite_sweeps() {
  std::vector<CheckReport> out;
  for (const auto& g : {DunklGeometry(3, 0.0), DunklGeometry(2, 0.5), DunklGeometry(3, 1.25)}) {
    const double alpha = 0.5 * (g.dim() - 1.0);
    const double p = 2.0;
    const double q = g.dim() / (alpha - 0.5);
    out.push_back(sweep_report("s-alpha c-i", sweep_s_alpha(alpha, SAlphaCase::c_i, p, q, g)));
    const auto q1 = sweep_wave_estimate({1.6, 2.0}, WaveLine::q1, {1.0}, g);
    out.push_back(sweep_report("wave q1", q1));
    const auto q2iv = line_q2_interval(g);
    if (!q2iv.empty) out.push_back(sweep_report("wave q2", sweep_wave_estimate({q2iv.hi}, WaveLine::q2, {1.0}, g)));
  }
  return out;
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& name) {
  if (name == "identities") {
    auto out = suite_bessel();
    append(out, suite_transform());
    return out;
  }
  if (name == "bessel") return suite_bessel();
  if (name == "transform") return suite_transform();
  if (name == "wave") return suite_wave();
  if (name == "rank1") return suite_rank1();
  if (name == "multipliers") return suite_multipliers();
  if (name == "sweeps") return suite_sweeps();
  if (name == "all") {
    std::vector<CheckReport> out;
    for (const auto& s : suite_names()) {
      if (s != "all" && s != "identities") append(out, run_suite(s));
    }
    return out;
  }
  throw ArgumentError("unknown suite '" + name + "'");
}

}  // namespace dunkl
