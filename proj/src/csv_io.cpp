#include "dunkl/csv_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ArgumentError("cannot write '" + tmp + "'");
    out << content;
    if (!out.flush()) throw ArgumentError("write failed for '" + tmp + "'");
  }
  std::filesystem::rename(tmp, target);
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string profile_csv(const RadialProfile& f) {
  std::string out = "r,re,im\n";
  const auto r = f.grid()->unique_nodes();
  const auto v = f.unique_values();
  for (std::size_t i = 0; i < r.size(); ++i) {
    out += format_number(r[i]) + "," + format_number(v[i].real()) + "," + format_number(v[i].imag()) + "\n";
  }
  return out;
}

std::string rank1_csv(const Rank1Function& f) {
  const auto r = f.grid()->unique_nodes();
  const auto e = f.even().unique_values();
  const auto o = f.odd_radial().unique_values();
  std::string out = "x,re,im\n";
  auto row = [&](double x, cplx v) {
    out += format_number(x) + "," + format_number(v.real()) + "," + format_number(v.imag()) + "\n";
  };
  for (std::size_t i = r.size(); i-- > 1;) row(-r[i], e[i] - r[i] * o[i]);
  for (std::size_t i = 0; i < r.size(); ++i) row(r[i], e[i] + r[i] * o[i]);
  return out;
}

std::string sweep_csv(const SweepResult& s) {
  std::string out = "p,q,family,lambda,t,ratio\n";
  for (const auto& row : s.rows) {
    out += format_number(row.p) + "," + format_number(row.q) + "," + row.family + "," + format_number(row.lambda) +
           "," + format_number(row.t) + "," + format_number(row.ratio) + "\n";
  }
  return out;
}

namespace {

double parse_field(const std::string& s, std::size_t line) {
  std::istringstream is(s);
  is.imbue(std::locale::classic());
  double x;
  if (!(is >> x) || !(is >> std::ws).eof() || !std::isfinite(x))
    throw ArgumentError("profile CSV line " + std::to_string(line) + ": bad number '" + s + "'");
  return x;
}

}  // namespace

ProfileSamples parse_profile_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  ProfileSamples s;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "r,re,im") throw ArgumentError("profile CSV: expected header 'r,re,im'");
      header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 3) throw ArgumentError("profile CSV line " + std::to_string(lineno) + ": expected 3 fields");
    const double r = parse_field(fields[0], lineno);
    if (r < 0.0) throw ArgumentError("profile CSV line " + std::to_string(lineno) + ": negative r");
    if (!s.r.empty() && !(r > s.r.back()))
      throw ArgumentError("profile CSV line " + std::to_string(lineno) + ": r is not strictly increasing");
    s.r.push_back(r);
    s.values.emplace_back(parse_field(fields[1], lineno), parse_field(fields[2], lineno));
  }
  if (!header) throw ArgumentError("profile CSV: empty file");
  if (s.r.size() < 4) throw ArgumentError("profile CSV: need at least 4 rows");
  return s;
}

ProfileSamples read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_profile_csv(ss.str());
}

RadialProfile profile_from_samples(const ProfileSamples& s, const GridPtr& grid) {
  const auto un = grid->unique_nodes();
  if (un.size() == s.r.size()) {
    bool same = true;
    for (std::size_t i = 0; i < un.size() && same; ++i) same = std::abs(un[i] - s.r[i]) <= 1e-12 * (1.0 + un[i]);
    if (same) {
      std::vector<cplx> v(grid->storage_size());
      for (std::size_t k = 0; k < un.size(); ++k) {
        v[grid->unique_to_storage(k)] = s.values[k];
        // left-hand copy of a shared endpoint
        if (k > 0 && k + 1 < un.size() && k % (RadialGrid::kOrder - 1) == 0) v[grid->unique_to_storage(k) - 1] = s.values[k];
      }
      return RadialProfile(grid, std::move(v), TailClass::rapid);
    }
  }
  auto at = [&](double r) -> cplx {
    if (r > s.r.back()) return 0.0;
    const std::size_t n = s.r.size();
    std::size_t j = static_cast<std::size_t>(std::upper_bound(s.r.begin(), s.r.end(), r) - s.r.begin());
    std::size_t lo = j >= 2 ? j - 2 : 0;
    lo = std::min(lo, n - 4);
    cplx sum = 0.0;
    for (std::size_t a = lo; a < lo + 4; ++a) {
      double w = 1.0;
      for (std::size_t b = lo; b < lo + 4; ++b) {
        if (b != a) w *= (r - s.r[b]) / (s.r[a] - s.r[b]);
      }
      sum += w * s.values[a];
    }
    return sum;
  };
  return RadialProfile::sample(grid, at, TailClass::rapid);
}

}  // namespace dunkl
