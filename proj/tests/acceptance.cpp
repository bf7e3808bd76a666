#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/harness.hpp"

using namespace dunkl;

namespace {

bool verbose = false;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

void show(const CheckReport& r) {
  if (verbose) std::printf("    %s %s residual=%.3g tolerance=%.3g %s\n", r.pass ? "ok  " : "FAIL", r.name.c_str(), r.residual,
                           r.tolerance, r.detail.c_str());
}

Outcome from_reports(const std::vector<CheckReport>& reports) {
  Outcome o;
  const CheckReport* worst = nullptr;
  double worst_ratio = -1.0;
  for (const auto& r : reports) {
    show(r);
    o.pass = o.pass && r.pass;
    const double ratio = std::isfinite(r.residual) ? r.residual / r.tolerance : INFINITY;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = &r;
    }
  }
  if (worst) o.detail = "worst " + worst->name + " " + fmt("%.4g", worst->residual) + " vs " + fmt("%.4g", worst->tolerance);
  return o;
}

void add_sweep(Outcome& o, const std::string& label, const SweepResult& s) {
  const bool ok = s.verdict == Verdict::bounded && s.saturation < 0.05;
  if (verbose)
    std::printf("    %s %s rows=%zu saturation=%.3g verdict=%s\n", ok ? "ok  " : "FAIL", label.c_str(), s.rows.size(),
                s.saturation, to_string(s.verdict).c_str());
  o.pass = o.pass && ok;
}

std::vector<double> line_points(const DunklGeometry& g, WaveLine line) {
  const PInterval iv = line == WaveLine::q1 ? line_q1_interval(g) : line_q2_interval(g);
  std::vector<double> ps;
  if (iv.empty) return ps;
  for (double p : {iv.lo, 0.5 * (iv.lo + iv.hi), iv.hi}) {
    if (!(p > 1.0)) continue;
    try {
      const double q = line == WaveLine::q1 ? line_q1(p, g) : line_q2(p, g);
      if (std::isfinite(q)) ps.push_back(p);
    } catch (const RangeError&) {
    }
  }
  return ps;
}

Outcome criterion7() {
  Outcome o;
  double worst_sat = 0.0;
  struct Case {
    DunklGeometry g;
    std::vector<double> ps;
  };
  const Case cases[] = {{DunklGeometry(3, 0.0), {1.5, 2.0}}, {DunklGeometry(2, 0.5), {1.5, 2.0}},
                        {DunklGeometry(3, 1.25), {1.8, 2.0}}};
  for (const auto& c : cases) {
    const double alpha = c.g.gamma() + 0.5 * (c.g.n() - 1);
    for (double p : c.ps) {
      const double q = c.g.dim() / (alpha - (1.0 - 1.0 / p));
      const auto s = sweep_s_alpha(alpha, SAlphaCase::c_i, p, q, c.g);
      add_sweep(o, "c-i n=" + std::to_string(c.g.n()) + " gamma=" + fmt("%g", c.g.gamma()) + " p=" + fmt("%g", p) +
                       " q=" + fmt("%g", q),
                s);
      worst_sat = std::max(worst_sat, s.saturation);
    }
  }
  std::string probes;
  for (const auto& g : {DunklGeometry(3, 0.0), DunklGeometry(3, 1.25)}) {
    const double alpha = g.gamma() + 0.5 * (g.n() - 1);
    const double p = 2.0;
    const double inv_q = (alpha - 0.5) / g.dim() - 0.1;
    const double predicted = std::exp2(4.0 * 0.1 * g.dim());
    const auto s = sweep_s_alpha(alpha, SAlphaCase::c_i, p, 1.0 / inv_q, g, true);
    const bool ok = s.verdict == Verdict::growing && s.growth >= 2.0;
    if (verbose)
      std::printf("    %s probe D=%g q=%g growth=%.4g predicted=%.4g\n", ok ? "ok  " : "FAIL", g.dim(), 1.0 / inv_q,
                  s.growth, predicted);
    o.pass = o.pass && ok;
    probes += " D=" + fmt("%g", g.dim()) + ":" + fmt("%.3f", s.growth) + "/" + fmt("%.3f", predicted);
  }
  o.detail = "max saturation " + fmt("%.3g", worst_sat) + "; probe growth measured/predicted" + probes;
  return o;
}

Outcome criterion8() {
  Outcome o;
  int sweeps = 0, vacuous = 0;
  double worst_sat = 0.0;
  for (const auto& g : reference_geometries()) {
    for (WaveLine line : {WaveLine::q1, WaveLine::q2}) {
      const auto ps = line_points(g, line);
      const std::string label =
          "radial " + to_string(line) + " n=" + std::to_string(g.n()) + " gamma=" + fmt("%g", g.gamma());
      if (ps.empty()) {
        ++vacuous;
        if (verbose) std::printf("    ok   %s empty line (vacuous)\n", label.c_str());
        continue;
      }
      const auto s = sweep_wave_estimate(ps, line, {1.0}, g);
      add_sweep(o, label, s);
      worst_sat = std::max(worst_sat, s.saturation);
      ++sweeps;
    }
  }
  for (double k : {0.0, 1.0}) {
    for (WaveLine line : {WaveLine::q1, WaveLine::q2}) {
      const auto ps = line_points(DunklGeometry(1, k), line);
      const auto s = sweep_wave_rank1(ps.empty() ? std::vector<double>{1.5} : ps, line, {1.0}, k);
      if (s.rows.empty()) ++vacuous;
      else ++sweeps;
      add_sweep(o, "rank-one " + to_string(line) + " k=" + fmt("%g", k), s);
      worst_sat = std::max(worst_sat, s.saturation);
    }
  }
  o.detail = std::to_string(sweeps) + " sweeps bounded, " + std::to_string(vacuous) + " vacuous (D = 1), max saturation " +
             fmt("%.3g", worst_sat);
  return o;
}

Outcome criterion9() {
  std::vector<CheckReport> reports;
  for (double k : {0.0, 1.0}) {
    reports.push_back(check_rank1_eigen(k));
    reports.push_back(check_kernel_ode(k));
    reports.push_back(check_riesz_square(k));
  }
  reports.push_back(check_riesz_bounded(1.0, {1.5, 2.0, 3.0}));
  bool range_ok = true;
  for (const auto& g : {DunklGeometry(1, 1.0), DunklGeometry(1, 0.5)}) {
    reports.push_back(check_apsi(g, g.dim() + 0.5));
    bool threw = false;
    try {
      check_apsi(g, g.dim() - 0.5);
    } catch (const RangeError&) {
      threw = true;
    }
    range_ok = range_ok && threw;
    if (verbose) std::printf("    %s a-psi range error at p=%g\n", threw ? "ok  " : "FAIL", g.dim() - 0.5);
  }
  Outcome o = from_reports(reports);
  o.pass = o.pass && range_ok;
  o.detail += range_ok ? "; range error below D" : "; missing range error below D";
  return o;
}

Outcome criterion10() {
  std::vector<CheckReport> reports;
  for (const auto& g : {DunklGeometry(1, 0.0), DunklGeometry(3, 0.0), DunklGeometry(3, 1.25)})
    reports.push_back(check_weak_type_phi_half(g));
  for (double k : {0.0, 1.0}) {
    reports.push_back(check_translation_sup(k));
    reports.push_back(check_translation_contraction(k));
  }
  const auto growth = check_translated_psi_growth(1.0, {0, 1, 2, 3, 4, 5, 6});
  reports.push_back(growth);
  Outcome o = from_reports(reports);
  o.detail += "; translated-psi slope " + fmt("%.3f", growth.residual) + " (" + growth.detail + ")";
  return o;
}

std::vector<Criterion> criteria() {
  const std::vector<cplx> zs{0.0, 0.3, 0.7, cplx(0.3, 5.0), cplx(0.9, -3.0)};
  return {
      {1, "Phi_z transform identity", 60.0,
       [zs] { return from_reports({check_phi_transform(zs, reference_geometries(), 40.0, 1e-7)}); }},
      {2, "transform core", 60.0,
       [] {
         std::vector<CheckReport> r;
         for (const auto& g : reference_geometries()) {
           r.push_back(check_gaussian_fixed_point(g));
           r.push_back(check_double_transform(g));
           r.push_back(check_plancherel(g));
         }
         return from_reports(r);
       }},
      {3, "Bessel suite", 30.0,
       [] {
         return from_reports({check_bessel_recurrence(), check_bessel_derivative(), check_sonine_grid(),
                              check_bessel_decay_slope()});
       }},
      {4, "wave oracles", 60.0, [] { return from_reports({check_dalembert(), check_spherical_means()}); }},
      {5, "Huygens and finite speed", 60.0,
       [] {
         return from_reports(
             {check_huygens(), check_finite_speed(DunklGeometry(1, 1.0)), check_finite_speed(DunklGeometry(3, 1.0))});
       }},
      {6, "energy conservation", 0.0,
       [] { return from_reports({check_energy(DunklGeometry(1, 0.0)), check_energy(DunklGeometry(3, 1.25))}); }},
      {7, "S_alpha sweep and growth probe", 600.0, criterion7},
      {8, "wave sweeps on (q1) and (q2)", 600.0, criterion8},
      {9, "rank-one calculus", 0.0, criterion9},
      {10, "weak type and translation", 0.0, criterion10},
  };
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "-v") || !std::strcmp(argv[i], "--verbose")) verbose = true;
  }
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s <= 0.0 || secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::string time = fmt("%.1f s", secs);
    if (c.budget_s > 0.0) time += " / " + fmt("%.0f s", c.budget_s);
    std::printf("%s criterion %d: %s: %s [%s]%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                time.c_str(), in_time ? "" : " over budget");
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
