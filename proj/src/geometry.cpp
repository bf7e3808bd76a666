#include "dunkl/geometry.hpp"

#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

bool leq(double a, double b) { return a <= b + kExponentTol; }
bool near(double a, double b) { return std::abs(a - b) <= kExponentTol; }

std::string interval_text(const PInterval& iv) {
  return "[" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "]";
}

}  // namespace

DunklGeometry::DunklGeometry(int n, double gamma) : n_(n), gamma_(gamma) {
  if (n < 1) throw ArgumentError("geometry: n must be >= 1");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ArgumentError("geometry: gamma must be finite and >= 0");
}

ExponentPair::ExponentPair(double p, double q) : p_(p), q_(q) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ArgumentError("exponents: p must lie in (1, inf)");
  if (!(q > 1.0) || !std::isfinite(q)) throw ArgumentError("exponents: q must lie in (1, inf)");
}

double reduced_bessel_order(const DunklGeometry& geom) { return geom.nu(); }
double homogeneous_dimension(const DunklGeometry& geom) { return geom.dim(); }

PInterval line_q1_interval(const DunklGeometry& geom) {
  const double d = geom.dim();
  PInterval iv{2.0 * (d + 1.0) / (d + 3.0), 2.0, false};
  // The line needs (D-1)/2 > 1/p' somewhere in the interval, i.e. D > 1.
  iv.empty = !(d > 1.0 + kExponentTol);
  return iv;
}

PInterval line_q2_interval(const DunklGeometry& geom) {
  const double d = geom.dim();
  PInterval iv{2.0 * d / (d + 2.0), 2.0 * (d + 1.0) / (d + 3.0), false};
  iv.empty = !(iv.hi > 1.0 + kExponentTol);
  return iv;
}

double line_q1(double p, const DunklGeometry& geom) {
  const PInterval iv = line_q1_interval(geom);
  if (iv.empty) throw RangeError("line_q1: no admissible p when n + 2 gamma = 1");
  if (!leq(iv.lo, p) || !leq(p, iv.hi) || !(p > 1.0))
    throw RangeError("line_q1: p = " + std::to_string(p) + " outside " + interval_text(iv));
  const double d = geom.dim();
  const double denom = 0.5 * (d - 1.0) - (1.0 - 1.0 / p);
  if (!(denom > kExponentTol))
    throw RangeError("line_q1: p = " + std::to_string(p) + " gives no finite q for this geometry");
  return d / denom;
}

double line_q2(double p, const DunklGeometry& geom) {
  const PInterval iv = line_q2_interval(geom);
  if (iv.empty) throw RangeError("line_q2: no admissible p when n + 2 gamma = 1");
  if (!leq(iv.lo, p) || !leq(p, iv.hi) || !(p > 1.0))
    throw RangeError("line_q2: p = " + std::to_string(p) + " outside " + interval_text(iv));
  const double d = geom.dim();
  const double inv_q = 0.5 * (d - 1.0) - d * (1.0 - 1.0 / p);
  if (!(inv_q > kExponentTol))
    throw RangeError("line_q2: p = " + std::to_string(p) + " gives no finite q for this geometry");
  return 1.0 / inv_q;
}

std::string to_string(SAlphaCase c) {
  switch (c) {
    case SAlphaCase::a: return "a";
    case SAlphaCase::b: return "b";
    case SAlphaCase::c_i: return "c-i";
    case SAlphaCase::c_ii: return "c-ii";
    case SAlphaCase::none: return "none";
  }
  return "none";
}

SAlphaCase s_alpha_case_from_string(const std::string& s) {
  if (s == "a") return SAlphaCase::a;
  if (s == "b") return SAlphaCase::b;
  if (s == "c-i") return SAlphaCase::c_i;
  if (s == "c-ii") return SAlphaCase::c_ii;
  if (s == "none") return SAlphaCase::none;
  throw ArgumentError("unknown case label '" + s + "'");
}

bool s_alpha_case_holds(SAlphaCase c, double alpha, const ExponentPair& pair, const DunklGeometry& geom) {
  const double d = geom.dim();
  if (alpha < -kExponentTol || alpha > 0.5 * (d + 1.0) + kExponentTol)
    throw RangeError("s_alpha: alpha = " + std::to_string(alpha) + " outside [0, " +
                     std::to_string(0.5 * (d + 1.0)) + "]");
  const double p = pair.p(), q = pair.q();
  const double inv_pc = 1.0 - 1.0 / p;
  const double p_split = (d + 1.0) / (d + 1.0 - alpha);
  switch (c) {
    case SAlphaCase::a:
      return leq(p, 2.0) && leq(2.0, q) && leq(1.0 / p - 1.0 / q, (d + 1.0 - 2.0 * alpha) / (2.0 * d));
    case SAlphaCase::b:
      return near(p, p_split) && near(1.0 / q, inv_pc);
    case SAlphaCase::c_i:
      return leq(0.5, alpha) && leq(p_split, p) && leq(p, 2.0) && near(d / q, alpha - inv_pc);
    case SAlphaCase::c_ii:
      return leq(0.5, alpha) && leq(d / (d - alpha + 0.5), p) && leq(p, p_split) &&
             near(1.0 / q, alpha - d * inv_pc);
    case SAlphaCase::none:
      return false;
  }
  return false;
}

SAlphaCase classify_s_alpha(double alpha, const ExponentPair& pair, const DunklGeometry& geom) {
  for (SAlphaCase c : {SAlphaCase::a, SAlphaCase::b, SAlphaCase::c_i, SAlphaCase::c_ii})
    if (s_alpha_case_holds(c, alpha, pair, geom)) return c;
  return SAlphaCase::none;
}

}  // namespace dunkl
