#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dunkl/config.hpp"
#include "dunkl/csv_io.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/harness.hpp"
#include "dunkl/hankel.hpp"
#include "dunkl/multipliers.hpp"

using namespace dunkl;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kEnvelope = 3 };

struct Options {
  std::string config;
  std::string out;
  std::string suite;
  bool expect_growth = false;
};

RunConfig load(const Options& o) {
  RunConfig c = o.config.empty() ? parse_config(R"({"version": 1})") : load_config(o.config);
  if (!o.out.empty()) c.output_dir = o.out;
  return c;
}

std::string out_path(const RunConfig& c, const std::string& name) {
  return (std::filesystem::path(c.output_dir) / name).string();
}

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

void print_line(std::ostringstream& os, std::string& csv, const std::string& name, const PInterval& iv,
                const DunklGeometry& g, double (*line)(double, const DunklGeometry&)) {
  if (iv.empty) {
    os << "line " << name << ": empty (no p in (1, 2] qualifies)\n";
    return;
  }
  os << "line " << name << ": p in [" << fixed(iv.lo) << ", " << fixed(iv.hi) << "]\n";
  for (int i = 0; i <= 4; ++i) {
    const double p = iv.lo + (iv.hi - iv.lo) * i / 4.0;
    if (!(p > 1.0)) continue;
    try {
      const double q = line(p, g);
      os << "  p=" << fixed(p) << " q=" << fixed(q) << "\n";
      csv += name + "," + format_number(p) + "," + format_number(q) + "\n";
    } catch (const RangeError&) {
      os << "  p=" << fixed(p) << " q=inf\n";
    }
  }
}

int cmd_info(const Options& o) {
  const RunConfig c = load(o);
  const DunklGeometry g = c.geometry();
  const double d = g.dim();
  std::ostringstream os;
  std::string csv = "line,p,q\n";
  os << "geometry n=" << g.n() << " gamma=" << format_number(g.gamma()) << " D=" << format_number(d)
     << " nu=" << format_number(g.nu()) << "\n";
  print_line(os, csv, "q1", line_q1_interval(g), g, line_q1);
  print_line(os, csv, "q2", line_q2_interval(g), g, line_q2);
  const double alpha = 0.5 * (d - 1.0);
  const double p_split = (d + 1.0) / (d + 1.0 - alpha);
  os << "S_alpha cases at alpha=" << fixed(alpha) << ":\n";
  os << "  a: p <= 2 <= q, 1/p - 1/q <= " << fixed((d + 1.0 - 2.0 * alpha) / (2.0 * d)) << "\n";
  os << "  b: p = " << fixed(p_split) << ", q = p'\n";
  if (alpha >= 0.5) {
    os << "  c-i: p in [" << fixed(p_split) << ", 2], D/q = alpha - 1/p'\n";
    os << "  c-ii: p in [" << fixed(d / (d - alpha + 0.5)) << ", " << fixed(p_split) << "], 1/q = alpha - D/p'\n";
  } else {
    os << "  c-i, c-ii: need alpha >= 1/2\n";
  }
  std::cout << os.str();
  if (!o.out.empty()) write_file_atomic(out_path(c, "info.csv"), csv);
  return kOk;
}

int cmd_transform(const Options& o) {
  const RunConfig c = load(o);
  if (c.transform_input.empty()) throw ConfigError("transform: set transform.input in the config");
  const GridPtr grid = c.grid();
  const auto f = profile_from_samples(read_profile_csv(c.transform_input), grid);
  const auto F = hankel_forward(f, c.geometry());
  const std::string path = out_path(c, "transform.csv");
  write_file_atomic(path, profile_csv(F));
  std::cout << "wrote " << path << "\n";
  return kOk;
}

RadialProfile make_data(const DataSpec& d, const GridPtr& grid) {
  if (d.kind == "gaussian") {
    const double s = d.sigma;
    return RadialProfile::sample(grid, [s](double r) { return cplx(std::exp(-0.5 * r * r / (s * s))); });
  }
  if (d.kind == "bump") {
    const double R = d.radius;
    return RadialProfile::sample(
        grid,
        [R](double r) {
          const double u = r / R;
          return cplx(u >= 1.0 ? 0.0 : std::exp(1.0 - 1.0 / (1.0 - u * u)));
        },
        TailClass::compact);
  }
  if (d.kind == "csv") return profile_from_samples(read_profile_csv(d.path), grid);
  return RadialProfile::zero(grid);
}

int cmd_propagate(const Options& o) {
  const RunConfig c = load(o);
  const GridPtr grid = c.grid();
  const DunklGeometry g = c.geometry();
  const auto f = make_data(c.f, grid);
  const auto pos = make_data(c.g, grid);
  for (double t : c.t_list) {
    const std::string path = out_path(c, "u_t" + fixed(t) + ".csv");
    if (g.n() == 1) {
      const auto zero = RadialProfile::zero(grid);
      const auto u = wave_propagate_rank1(Rank1Function(f, zero, g.gamma()), Rank1Function(pos, zero, g.gamma()), t);
      write_file_atomic(path, rank1_csv(u));
    } else {
      write_file_atomic(path, profile_csv(wave_propagate({f, pos, t, g})));
    }
    std::cout << "wrote " << path << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const RunConfig c = load(o);
  const std::string suite = o.suite.empty() ? c.suite : o.suite;
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ConfigError("unknown suite '" + suite + "'");
  auto reports = run_suite(suite);
  bool ok = true;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (auto& r : reports) {
    if (c.tolerance_override) {
      r.tolerance = *c.tolerance_override;
      r.pass = std::isfinite(r.residual) && r.residual <= r.tolerance;
    }
    ok = ok && r.pass;
    j.push_back({{"check", r.name}, {"residual", r.residual}, {"tolerance", r.tolerance}, {"pass", r.pass}});
    std::printf("%s %s residual=%s tolerance=%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                format_number(r.residual).c_str(), format_number(r.tolerance).c_str());
  }
  const std::string path = out_path(c, "report.json");
  write_file_atomic(path, j.dump(2) + "\n");
  std::cout << "wrote " << path << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_sweep(const Options& o) {
  const RunConfig c = load(o);
  if (!c.sweep) throw ConfigError("sweep: add a \"sweep\" section to the config");
  SweepSpec s = *c.sweep;
  if (o.expect_growth) s.expect_growth = true;
  const DunklGeometry g = c.geometry();
  SweepResult r;
  if (s.kind == "s_alpha") {
    r = sweep_s_alpha(s.alpha, s_alpha_case_from_string(s.case_label), s.p.front(), s.q, g, s.expect_growth);
  } else if (s.kind == "wave") {
    r = sweep_wave_estimate(s.p, wave_line_from_string(s.line), s.t, g);
  } else {
    if (g.n() != 1) throw ConfigError("sweep: wave_rank1 needs geometry.n = 1");
    r = sweep_wave_rank1(s.p, wave_line_from_string(s.line), s.t, g.gamma());
  }
  const std::string path = out_path(c, "sweep.csv");
  write_file_atomic(path, sweep_csv(r));
  std::printf("verdict %s saturation %s growth %s\n", to_string(r.verdict).c_str(), format_number(r.saturation).c_str(),
              format_number(r.growth).c_str());
  std::cout << "wrote " << path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dunkl_lab: radial and rank-one Dunkl transform laboratory"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON config file");
    sub->add_option("--out", o.out, "output directory");
  };
  auto* info = app.add_subcommand("info", "exponent lines and S_alpha case regions for the geometry");
  auto* transform = app.add_subcommand("transform", "transform a profile CSV");
  auto* propagate = app.add_subcommand("propagate", "wave snapshots at the configured times");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* sweep = app.add_subcommand("sweep", "dilation sweep of an estimate");
  for (auto* s : {info, transform, propagate, verify, sweep}) add_common(s);
  verify->add_option("--suite", o.suite, "suite name");
  sweep->add_flag("--expect-growth", o.expect_growth, "allow inadmissible exponents (growth probe)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*info) return cmd_info(o);
    if (*transform) return cmd_transform(o);
    if (*propagate) return cmd_propagate(o);
    if (*verify) return cmd_verify(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const ResolutionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEnvelope;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEnvelope;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
