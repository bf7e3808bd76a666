#include "dunkl/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dunkl {

using nlohmann::json;

namespace {

void only_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double get_number(const json& obj, const std::string& key, const std::string& where, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": must be finite");
  return x;
}

int get_int(const json& obj, const std::string& key, const std::string& where, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& where, std::string fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::vector<double> get_numbers(const json& obj, const std::string& key, const std::string& where,
                                std::vector<double> fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array() && !v.empty()) {
    for (const auto& x : v) {
      if (!x.is_number()) throw ConfigError(where + "." + key + ": expected numbers");
      out.push_back(x.get<double>());
    }
  } else {
    throw ConfigError(where + "." + key + ": expected a number or a non-empty array");
  }
  for (double x : out) {
    if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": values must be finite");
  }
  return out;
}

DataSpec parse_data(const json& obj, const std::string& where) {
  only_keys(obj, where, {"kind", "sigma", "radius", "path"});
  DataSpec d;
  d.kind = get_string(obj, "kind", where, "zero");
  d.sigma = get_number(obj, "sigma", where, 1.0);
  d.radius = get_number(obj, "radius", where, 3.0);
  d.path = get_string(obj, "path", where, "");
  if (d.kind != "gaussian" && d.kind != "bump" && d.kind != "zero" && d.kind != "csv")
    throw ConfigError(where + ".kind: expected gaussian, bump, zero or csv");
  if (!(d.sigma > 0.0)) throw ConfigError(where + ".sigma: must be positive");
  if (!(d.radius > 0.0)) throw ConfigError(where + ".radius: must be positive");
  if (d.kind == "csv" && d.path.empty()) throw ConfigError(where + ".path: required for csv data");
  return d;
}

SweepSpec parse_sweep(const json& obj) {
  const std::string w = "sweep";
  only_keys(obj, w, {"kind", "alpha", "case", "p", "q", "line", "t", "expect_growth"});
  SweepSpec s;
  s.kind = get_string(obj, "kind", w, "wave");
  if (s.kind != "s_alpha" && s.kind != "wave" && s.kind != "wave_rank1")
    throw ConfigError("sweep.kind: expected s_alpha, wave or wave_rank1");
  s.alpha = get_number(obj, "alpha", w, 0.0);
  s.case_label = get_string(obj, "case", w, "c-i");
  s.p = get_numbers(obj, "p", w, {2.0});
  s.q = get_number(obj, "q", w, 0.0);
  s.line = get_string(obj, "line", w, "q1");
  s.t = get_numbers(obj, "t", w, {1.0});
  if (obj.contains("expect_growth")) {
    if (!obj.at("expect_growth").is_boolean()) throw ConfigError("sweep.expect_growth: expected a boolean");
    s.expect_growth = obj.at("expect_growth").get<bool>();
  }
  if (s.kind == "s_alpha" && s.p.size() != 1) throw ConfigError("sweep.p: s_alpha takes a single p");
  if (s.kind == "s_alpha" && !(s.q > 1.0)) throw ConfigError("sweep.q: required for s_alpha and > 1");
  if (s.line != "q1" && s.line != "q2") throw ConfigError("sweep.line: expected q1 or q2");
  for (double p : s.p) {
    if (!(p > 1.0)) throw ConfigError("sweep.p: values must exceed 1");
  }
  for (double t : s.t) {
    if (!(t > 0.0)) throw ConfigError("sweep.t: values must be positive");
  }
  return s;
}

}  // namespace

GridPtr RunConfig::grid() const { return RadialGrid::build(r_max, grid_n, grading)->with_break(1.0); }

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(root, "config",
            {"version", "geometry", "grid", "quadrature", "psi", "suite", "output", "transform", "propagate", "sweep",
             "verify"});
  if (!root.contains("version")) throw ConfigError("config: missing required key 'version'");
  RunConfig c;
  c.version = get_int(root, "version", "config", 0);
  if (c.version != kConfigVersion)
    throw ConfigError("config: unsupported version " + std::to_string(c.version) + " (expected " +
                      std::to_string(kConfigVersion) + ")");

  if (root.contains("geometry")) {
    const json& g = root.at("geometry");
    only_keys(g, "geometry", {"n", "gamma"});
    c.n = get_int(g, "n", "geometry", c.n);
    c.gamma = get_number(g, "gamma", "geometry", c.gamma);
  }
  if (c.n < 1) throw ConfigError("geometry.n: must be >= 1");
  if (!(c.gamma >= 0.0)) throw ConfigError("geometry.gamma: must be >= 0");

  if (root.contains("grid")) {
    const json& g = root.at("grid");
    only_keys(g, "grid", {"r_max", "N", "grading"});
    c.r_max = get_number(g, "r_max", "grid", c.r_max);
    c.grid_n = get_int(g, "N", "grid", c.grid_n);
    try {
      c.grading = grading_from_string(get_string(g, "grading", "grid", "uniform"));
    } catch (const ArgumentError& e) {
      throw ConfigError(std::string("grid.grading: ") + e.what());
    }
  }
  if (!(c.r_max > 1.0)) throw ConfigError("grid.r_max: must exceed 1");
  if (c.grid_n < 16) throw ConfigError("grid.N: must be >= 16");

  if (root.contains("quadrature")) {
    const json& q = root.at("quadrature");
    only_keys(q, "quadrature", {"tol", "max_panels"});
    c.quad_tol = get_number(q, "tol", "quadrature", c.quad_tol);
    c.max_panels = get_int(q, "max_panels", "quadrature", c.max_panels);
  }
  if (!(c.quad_tol > 0.0) || c.quad_tol > 1e-3) throw ConfigError("quadrature.tol: must lie in (0, 1e-3]");
  if (c.max_panels < 1) throw ConfigError("quadrature.max_panels: must be positive");
  if ((c.grid_n - 1 + 14) / 15 > c.max_panels) throw ConfigError("grid.N: needs more panels than quadrature.max_panels");

  if (root.contains("psi")) {
    const json& p = root.at("psi");
    only_keys(p, "psi", {"a", "b"});
    c.psi_a = get_number(p, "a", "psi", c.psi_a);
    c.psi_b = get_number(p, "b", "psi", c.psi_b);
  }
  if (c.psi_a != 1.0 || c.psi_b != 2.0) throw ConfigError("psi: only the cutoff with a = 1, b = 2 is supported");

  c.suite = get_string(root, "suite", "config", c.suite);

  if (root.contains("output")) {
    const json& o = root.at("output");
    only_keys(o, "output", {"dir"});
    c.output_dir = get_string(o, "dir", "output", c.output_dir);
  }
  if (root.contains("transform")) {
    const json& t = root.at("transform");
    only_keys(t, "transform", {"input"});
    c.transform_input = get_string(t, "input", "transform", "");
  }
  if (root.contains("propagate")) {
    const json& p = root.at("propagate");
    only_keys(p, "propagate", {"f", "g", "t_list"});
    if (p.contains("f")) c.f = parse_data(p.at("f"), "propagate.f");
    if (p.contains("g")) c.g = parse_data(p.at("g"), "propagate.g");
    c.t_list = get_numbers(p, "t_list", "propagate", c.t_list);
    for (double t : c.t_list) {
      if (t < 0.0) throw ConfigError("propagate.t_list: times must be >= 0");
    }
  }
  if (root.contains("sweep")) c.sweep = parse_sweep(root.at("sweep"));
  if (root.contains("verify")) {
    const json& v = root.at("verify");
    only_keys(v, "verify", {"tolerance_override"});
    if (v.contains("tolerance_override")) {
      const double t = get_number(v, "tolerance_override", "verify", 0.0);
      if (t < 0.0) throw ConfigError("verify.tolerance_override: must be >= 0");
      c.tolerance_override = t;
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace dunkl
