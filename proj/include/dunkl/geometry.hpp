#pragma once

#include <string>

namespace dunkl {

/// Dimension n and multiplicity sum gamma of a Dunkl setting.
class DunklGeometry {
 public:
  DunklGeometry(int n, double gamma);

  int n() const { return n_; }
  double gamma() const { return gamma_; }
  /// gamma + n/2 - 1
  double nu() const { return gamma_ + 0.5 * n_ - 1.0; }
  /// n + 2 gamma
  double dim() const { return n_ + 2.0 * gamma_; }

 private:
  int n_;
  double gamma_;
};

class ExponentPair {
 public:
  ExponentPair(double p, double q);

  double p() const { return p_; }
  double q() const { return q_; }
  double p_conj() const { return p_ / (p_ - 1.0); }

 private:
  double p_;
  double q_;
};

inline constexpr double kExponentTol = 1e-12;

double reduced_bessel_order(const DunklGeometry& geom);
double homogeneous_dimension(const DunklGeometry& geom);

/// Closed p-interval on which a wave-estimate line is defined; empty when no p in (1, 2] qualifies.
struct PInterval {
  double lo;
  double hi;
  bool empty;
};

PInterval line_q1_interval(const DunklGeometry& geom);
PInterval line_q2_interval(const DunklGeometry& geom);

/// D/q = (D-1)/2 - 1/p'. Throws RangeError outside line_q1_interval.
double line_q1(double p, const DunklGeometry& geom);
/// 1/q = (D-1)/2 - D/p'. Throws RangeError outside line_q2_interval.
double line_q2(double p, const DunklGeometry& geom);

enum class SAlphaCase { a, b, c_i, c_ii, none };

std::string to_string(SAlphaCase c);
SAlphaCase s_alpha_case_from_string(const std::string& s);

/// Whether one specific case of the S_alpha L^p-L^q estimate holds for (alpha, p, q).
bool s_alpha_case_holds(SAlphaCase c, double alpha, const ExponentPair& pair, const DunklGeometry& geom);

/// First case in the order a, b, c-i, c-ii that holds; none otherwise.
SAlphaCase classify_s_alpha(double alpha, const ExponentPair& pair, const DunklGeometry& geom);

}  // namespace dunkl
