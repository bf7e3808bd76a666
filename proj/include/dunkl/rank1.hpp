#pragma once

#include <functional>
#include <memory>

#include "dunkl/hankel.hpp"
#include "dunkl/radial.hpp"

namespace dunkl {

/// f(x) = f_e(|x|) + x f_o(|x|) on the line, multiplicity k >= 0.
class Rank1Function {
 public:
  Rank1Function(RadialProfile even, RadialProfile odd_radial, double k);

  /// Splits samples of f on [-r_max, r_max] into even and odd-radial parts.
  /// With piecewise set, panel endpoints take one-sided limits from inside their panel.
  static Rank1Function sample(const GridPtr& grid, const std::function<cplx(double)>& f, double k,
                              TailClass tail = TailClass::rapid, bool piecewise = false);

  cplx operator()(double x) const;

  const RadialProfile& even() const { return even_; }
  const RadialProfile& odd_radial() const { return odd_; }
  double k() const { return k_; }
  const GridPtr& grid() const { return even_.grid(); }

  /// Transform of this function when it is known without re-transforming (e.g. multiplier outputs).
  const std::shared_ptr<const Rank1Function>& spectrum() const { return spectrum_; }
  void set_spectrum(std::shared_ptr<const Rank1Function> s) { spectrum_ = std::move(s); }

  Rank1Function reflected() const;
  Rank1Function operator+(const Rank1Function& o) const;
  Rank1Function operator-(const Rank1Function& o) const;
  Rank1Function operator*(cplx a) const;

 private:
  RadialProfile even_;
  RadialProfile odd_;
  double k_;
  std::shared_ptr<const Rank1Function> spectrum_;
};

/// m(xi) = even(|xi|) + xi * odd(|xi|).
struct Rank1Multiplier {
  RadialMultiplier even = RadialMultiplier::constant(0.0);
  RadialMultiplier odd = RadialMultiplier::constant(0.0);
};

/// (int_R |f(x)|^p |x|^{2k} dx)^{1/p}; p = kInf gives the sup over both half-lines.
double lp_norm_rank1(const Rank1Function& f, double p);

/// D^k f = f' + k (f(x) - f(-x)) / x.
Rank1Function dunkl_derivative_rank1(const Rank1Function& f);

/// E_k(x, i xi) = j_{k-1/2}(x xi) + i x xi/(2k+1) j_{k+1/2}(x xi), j_a(z) = Gamma(a+1) (2/z)^a J_a(z).
cplx dunkl_kernel_rank1(double x, double xi, double k);

/// Even part -> Hankel transform of order k-1/2; x g -> -i xi H_{k+1/2}(g).
Rank1Function dunkl_transform_rank1(const Rank1Function& f);

/// Inverse transform: F^{-1} G = (F G)(-x). The result caches G as its spectrum.
Rank1Function inverse_transform_rank1(const Rank1Function& spectrum);

/// F^{-1}(m F f).
Rank1Function apply_rank1_multiplier(const Rank1Function& f, const Rank1Multiplier& m);

/// Radial multiplier applied on both parts.
Rank1Function apply_radial_multiplier_rank1(const Rank1Function& f, const RadialMultiplier& m);

/// F^{-1}(E_k(x0, i .) F f); at k = 0 this is y -> f(y + x0).
Rank1Function dunkl_translate_rank1(const Rank1Function& f, double x0);

/// Multiplier -i sgn(xi).
Rank1Function riesz_rank1(const Rank1Function& f);

}  // namespace dunkl
