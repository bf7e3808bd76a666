#include "dunkl/rank1.hpp"

#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {
namespace {

constexpr int kOrder = RadialGrid::kOrder;
const cplx kI(0.0, 1.0);

std::shared_ptr<const Rank1Function> stripped(const Rank1Function& f) {
  auto copy = std::make_shared<Rank1Function>(f);
  copy->set_spectrum(nullptr);
  return copy;
}

// Normalised Bessel function j_a(z) = Gamma(a+1) 2^a z^{-a} J_a(z).
double small_j(double a, double z) { return std::tgamma(a + 1.0) * std::exp2(a) * scaled_bessel(a, std::abs(z)); }

RadialProfile times_node_power(const RadialProfile& f, int power) {
  const auto& g = f.grid();
  std::vector<cplx> v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::pow(g->nodes()[i], power);
  return RadialProfile(g, std::move(v), f.tail());
}

RadialProfile pointwise(const RadialProfile& a, const std::vector<cplx>& m) {
  std::vector<cplx> v = a.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= m[i];
  return RadialProfile(a.grid(), std::move(v), a.tail());
}

std::vector<cplx> sample_symbol(const RadialMultiplier& m, const GridPtr& g) {
  std::vector<cplx> out(g->storage_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = m(g->nodes()[i]);
  return out;
}

}  // namespace

Rank1Function::Rank1Function(RadialProfile even, RadialProfile odd_radial, double k)
    : even_(std::move(even)), odd_(std::move(odd_radial)), k_(k) {
  if (!(k >= 0.0)) throw ArgumentError("rank one: multiplicity k must be >= 0");
  if (even_.grid() != odd_.grid() && even_.grid()->breaks() != odd_.grid()->breaks())
    throw ArgumentError("rank one: even and odd parts must share a grid");
}

Rank1Function Rank1Function::sample(const GridPtr& grid, const std::function<cplx(double)>& f, double k,
                                    TailClass tail, bool piecewise) {
  std::vector<cplx> ev(grid->storage_size()), od(grid->storage_size());
  for (int p = 0; p < grid->panels(); ++p) {
    const double nudge = piecewise ? 1e-13 * grid->width(p) : 0.0;
    for (int i = 0; i < kOrder; ++i) {
      const std::size_t s = static_cast<std::size_t>(p) * kOrder + i;
      double r = grid->nodes()[s];
      if (i == 0 && r > 0.0) r += nudge;
      if (i == kOrder - 1) r -= nudge;
      const cplx plus = f(r), minus = f(-r);
      ev[s] = 0.5 * (plus + minus);
      od[s] = r > 0.0 ? (plus - minus) / (2.0 * r) : cplx(0.0);
    }
  }
  RadialProfile odd(grid, od, tail);
  od[0] = extrapolate_to_origin(odd);
  return Rank1Function(RadialProfile(grid, std::move(ev), tail), RadialProfile(grid, std::move(od), tail), k);
}

cplx Rank1Function::operator()(double x) const { return even_(std::abs(x)) + x * odd_(std::abs(x)); }

Rank1Function Rank1Function::reflected() const {
  Rank1Function out(even_, odd_ * cplx(-1.0), k_);
  if (spectrum_) out.spectrum_ = stripped(spectrum_->reflected());
  return out;
}

Rank1Function Rank1Function::operator+(const Rank1Function& o) const {
  Rank1Function out(even_ + o.even_, odd_ + o.odd_, k_);
  if (spectrum_ && o.spectrum_) out.spectrum_ = stripped(*spectrum_ + *o.spectrum_);
  return out;
}

Rank1Function Rank1Function::operator-(const Rank1Function& o) const { return *this + o * cplx(-1.0); }

Rank1Function Rank1Function::operator*(cplx a) const {
  Rank1Function out(even_ * a, odd_ * a, k_);
  if (spectrum_) out.spectrum_ = stripped(*spectrum_ * a);
  return out;
}

double lp_norm_rank1(const Rank1Function& f, double p) {
  if (std::isnan(p) || p < 1.0) throw ArgumentError("lp_norm: p must be >= 1");
  const auto& g = *f.grid();
  if (std::isinf(p)) {
    double m = 0.0;
    constexpr int kDense = 64;
    for (int panel = 0; panel < g.panels(); ++panel)
      for (int j = 0; j <= kDense; ++j) {
        const double r = g.breaks()[panel] + g.width(panel) * j / kDense;
        m = std::max({m, std::abs(f(r)), std::abs(f(-r))});
      }
    return m;
  }
  if (f.even().singular() || f.odd_radial().singular())
    throw DomainError("lp_norm_rank1: finite p is not supported for singular parts");
  const double e = 2.0 * f.k();
  double sum = 0.0;
  for (std::size_t i = 0; i < g.storage_size(); ++i) {
    const double r = g.nodes()[i];
    const cplx a = f.even().values()[i], b = r * f.odd_radial().values()[i];
    const double v = std::pow(std::abs(a + b), p) + std::pow(std::abs(a - b), p);
    if (v != 0.0) sum += g.weights()[i] * v * std::pow(r, e);
  }
  return std::pow(sum, 1.0 / p);
}

Rank1Function dunkl_derivative_rank1(const Rank1Function& f) {
  const double k = f.k();
  const auto& g = f.grid();
  const RadialProfile de = derivative(f.even());
  const RadialProfile dd = derivative(f.odd_radial());
  std::vector<cplx> ev(g->storage_size()), od(g->storage_size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double r = g->nodes()[i];
    ev[i] = (2.0 * k + 1.0) * f.odd_radial().values()[i] + r * dd.values()[i];
    od[i] = r > 0.0 ? de.values()[i] / r : cplx(0.0);
  }
  od[0] = derivative(de).values()[0];
  const auto tail = f.even().tail();
  return Rank1Function(RadialProfile(g, std::move(ev), tail), RadialProfile(g, std::move(od), tail), k);
}

cplx dunkl_kernel_rank1(double x, double xi, double k) {
  if (!(k >= 0.0)) throw DomainError("dunkl kernel: k must be >= 0");
  const double z = x * xi;
  return small_j(k - 0.5, z) + kI * (z / (2.0 * k + 1.0)) * small_j(k + 0.5, z);
}

Rank1Function dunkl_transform_rank1(const Rank1Function& f) {
  if (f.spectrum()) {
    Rank1Function out = *f.spectrum();
    out.set_spectrum(stripped(f.reflected()));
    return out;
  }
  const double k = f.k();
  const auto& g = f.grid();
  Rank1Function out(hankel_transform(f.even(), k - 0.5, g), hankel_transform(f.odd_radial(), k + 0.5, g) * -kI, k);
  out.set_spectrum(stripped(f.reflected()));
  return out;
}

Rank1Function inverse_transform_rank1(const Rank1Function& spectrum) {
  const double k = spectrum.k();
  const auto& g = spectrum.grid();
  Rank1Function out(hankel_transform(spectrum.even(), k - 0.5, g),
                    hankel_transform(spectrum.odd_radial(), k + 0.5, g) * kI, k);
  out.set_spectrum(stripped(spectrum));
  return out;
}

Rank1Function apply_rank1_multiplier(const Rank1Function& f, const Rank1Multiplier& m) {
  const Rank1Function ff = dunkl_transform_rank1(f);
  const auto& g = ff.grid();
  const auto me = sample_symbol(m.even, g), mo = sample_symbol(m.odd, g);
  RadialProfile ge = pointwise(ff.even(), me) + times_node_power(pointwise(ff.odd_radial(), mo), 2);
  const RadialProfile go = pointwise(ff.odd_radial(), me) + pointwise(ff.even(), mo);
  if (m.even.singular_origin || m.odd.singular_origin) {
    // The origin node carries weight when k = 0; use the right-hand limit there.
    std::vector<cplx> v = ge.values();
    v[0] = extrapolate_to_origin(ge);
    ge = RadialProfile(g, std::move(v), ge.tail());
  }
  return inverse_transform_rank1(Rank1Function(ge, go, f.k()));
}

Rank1Function apply_radial_multiplier_rank1(const Rank1Function& f, const RadialMultiplier& m) {
  Rank1Multiplier rm;
  rm.even = m;
  return apply_rank1_multiplier(f, rm);
}

Rank1Function dunkl_translate_rank1(const Rank1Function& f, double x0) {
  const double k = f.k();
  Rank1Multiplier m;
  m.even = RadialMultiplier::from_function([=](double rho) -> cplx { return small_j(k - 0.5, x0 * rho); },
                                           "kernel even part");
  m.odd = RadialMultiplier::from_function(
      [=](double rho) -> cplx { return kI * (x0 / (2.0 * k + 1.0)) * small_j(k + 0.5, x0 * rho); },
      "kernel odd part");
  return apply_rank1_multiplier(f, m);
}

Rank1Function riesz_rank1(const Rank1Function& f) {
  Rank1Multiplier m;
  m.odd.symbol = [](double rho) -> cplx { return -kI / rho; };
  m.odd.singular_origin = true;
  m.odd.note = "-i sgn(xi)";
  return apply_rank1_multiplier(f, m);
}

}  // namespace dunkl
