#include "dunkl/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {
namespace {

constexpr int kOrder = RadialGrid::kOrder;

struct LobattoTable {
  std::array<double, kOrder> x{};
  std::array<double, kOrder> w{};
  std::array<double, kOrder> bary{};
};

const LobattoTable& lobatto() {
  static const LobattoTable table = [] {
    LobattoTable t;
    const auto& rule = quad::gauss_lobatto(kOrder);
    for (int i = 0; i < kOrder; ++i) {
      t.x[i] = rule.nodes[i];
      t.w[i] = rule.weights[i];
    }
    for (int i = 0; i < kOrder; ++i) {
      double prod = 1.0;
      for (int k = 0; k < kOrder; ++k)
        if (k != i) prod *= t.x[i] - t.x[k];
      t.bary[i] = 1.0 / prod;
    }
    return t;
  }();
  return table;
}

void check_breaks(const std::vector<double>& b) {
  if (b.size() < 2) throw ArgumentError("grid: need at least one panel");
  if (b.front() != 0.0) throw ArgumentError("grid: first breakpoint must be 0");
  for (std::size_t i = 1; i < b.size(); ++i)
    if (!(b[i] > b[i - 1])) throw ArgumentError("grid: breakpoints must be strictly increasing");
}

void check_same_grid(const RadialProfile& a, const RadialProfile& b) {
  if (a.grid() != b.grid() && a.grid()->breaks() != b.grid()->breaks())
    throw ArgumentError("profile arithmetic needs a common grid");
}

}  // namespace

Grading grading_from_string(const std::string& s) {
  if (s == "uniform") return Grading::uniform;
  if (s == "graded") return Grading::graded;
  throw ArgumentError("unknown grading '" + s + "' (expected uniform or graded)");
}

RadialGrid::RadialGrid(std::vector<double> breaks) : breaks_(std::move(breaks)) {
  check_breaks(breaks_);
  const auto& t = lobatto();
  nodes_.reserve(static_cast<std::size_t>(panels()) * kOrder);
  weights_.reserve(nodes_.capacity());
  for (int p = 0; p < panels(); ++p) {
    const double a = breaks_[p], b = breaks_[p + 1], half = 0.5 * (b - a);
    for (int i = 0; i < kOrder; ++i) {
      double r = a + half * (t.x[i] + 1.0);
      if (i == 0) r = a;
      if (i == kOrder - 1) r = b;
      nodes_.push_back(r);
      weights_.push_back(half * t.w[i]);
    }
  }
}

std::shared_ptr<const RadialGrid> RadialGrid::build(double r_max, int n, Grading grading) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw ArgumentError("build_grid: r_max must be positive");
  if (n < kOrder) throw ArgumentError("build_grid: N must be >= 16");
  const int panels = (n - 1 + kOrder - 2) / (kOrder - 1);
  std::vector<double> breaks(panels + 1);
  for (int j = 0; j <= panels; ++j) {
    const double u = static_cast<double>(j) / panels;
    breaks[j] = grading == Grading::uniform ? r_max * u : r_max * (0.25 * u + 0.75 * u * u);
  }
  breaks.back() = r_max;
  return from_breaks(std::move(breaks));
}

std::shared_ptr<const RadialGrid> RadialGrid::from_breaks(std::vector<double> breaks) {
  return std::shared_ptr<const RadialGrid>(new RadialGrid(std::move(breaks)));
}

std::shared_ptr<const RadialGrid> RadialGrid::with_spacing(double r_max, double h,
                                                           const std::vector<double>& extra_breaks) {
  if (!(r_max > 0.0) || !(h > 0.0)) throw ArgumentError("grid: r_max and spacing must be positive");
  const int panels = std::max(1, static_cast<int>(std::ceil(r_max / h - 1e-9)));
  std::vector<double> breaks(panels + 1);
  for (int j = 0; j <= panels; ++j) breaks[j] = r_max * j / panels;
  for (double e : extra_breaks) {
    if (!(e > 0.0 && e < r_max)) continue;
    auto it = std::lower_bound(breaks.begin(), breaks.end(), e);
    if (std::abs(*it - e) > 1e-12 * r_max && std::abs(*(it - 1) - e) > 1e-12 * r_max) breaks.insert(it, e);
  }
  return from_breaks(std::move(breaks));
}

std::shared_ptr<const RadialGrid> RadialGrid::with_break(double r) const {
  std::vector<double> b = breaks_;
  if (r > 0.0 && r < r_max()) {
    auto it = std::lower_bound(b.begin(), b.end(), r);
    if (*it != r) b.insert(it, r);
  }
  return from_breaks(std::move(b));
}

std::shared_ptr<const RadialGrid> RadialGrid::scaled(double s) const {
  if (!(s > 0.0)) throw ArgumentError("grid: scale must be positive");
  std::vector<double> b = breaks_;
  for (double& x : b) x *= s;
  return from_breaks(std::move(b));
}

double RadialGrid::max_width() const {
  double w = 0.0;
  for (int p = 0; p < panels(); ++p) w = std::max(w, width(p));
  return w;
}

std::vector<double> RadialGrid::unique_nodes() const {
  std::vector<double> out(unique_size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = nodes_[unique_to_storage(k)];
  return out;
}

std::size_t RadialGrid::unique_to_storage(std::size_t k) const {
  const std::size_t p = std::min<std::size_t>(k / (kOrder - 1), panels() - 1);
  return p * kOrder + (k - p * (kOrder - 1));
}

int RadialGrid::panel_of(double r) const {
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), r);
  const int p = static_cast<int>(it - breaks_.begin()) - 1;
  return std::clamp(p, 0, panels() - 1);
}

cplx RadialGrid::interpolate(const cplx* v, int panel, double r) const {
  const auto& t = lobatto();
  const double a = breaks_[panel], b = breaks_[panel + 1];
  const double x = (2.0 * r - a - b) / (b - a);
  cplx num = 0.0;
  double den = 0.0;
  for (int i = 0; i < kOrder; ++i) {
    const double d = x - t.x[i];
    if (d == 0.0) return v[i];
    const double c = t.bary[i] / d;
    num += c * v[i];
    den += c;
  }
  return num / den;
}

std::string RadialGrid::descriptor() const {
  std::ostringstream os;
  os << "lobatto16 panels=" << panels() << " r_max=" << r_max() << " max_width=" << max_width();
  return os.str();
}

cplx SingularForm::operator()(double r) const {
  if (r < 0.0) r = -r;
  if (r >= edge) return 0.0;
  return regular(r) * std::exp(-exponent * std::log(edge - r));
}

RadialProfile::RadialProfile(GridPtr grid, std::vector<cplx> values, TailClass tail)
    : grid_(std::move(grid)), values_(std::move(values)), tail_(tail) {
  if (!grid_) throw ArgumentError("profile: null grid");
  if (values_.size() != grid_->storage_size()) throw ArgumentError("profile: value count does not match grid");
  for (const cplx& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ArgumentError("profile: non-finite value");
}

RadialProfile RadialProfile::sample(GridPtr grid, const std::function<cplx(double)>& f, TailClass tail) {
  std::vector<cplx> v(grid->storage_size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid->nodes()[i]);
  return RadialProfile(std::move(grid), std::move(v), tail);
}

RadialProfile RadialProfile::sample_piecewise(GridPtr grid, const std::function<cplx(double)>& f,
                                              TailClass tail) {
  std::vector<cplx> v(grid->storage_size());
  for (int p = 0; p < grid->panels(); ++p) {
    const double nudge = 1e-13 * grid->width(p);
    for (int i = 0; i < kOrder; ++i) {
      const std::size_t s = static_cast<std::size_t>(p) * kOrder + i;
      double r = grid->nodes()[s];
      if (i == 0) r += nudge;
      if (i == kOrder - 1) r -= nudge;
      v[s] = f(r);
    }
  }
  return RadialProfile(std::move(grid), std::move(v), tail);
}

RadialProfile RadialProfile::from_singular(GridPtr grid, SingularForm form) {
  std::vector<cplx> v(grid->storage_size());
  const double cap = form.edge * (1.0 - 1e-9);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = grid->nodes()[i];
    v[i] = r < form.edge ? form(std::min(r, cap)) : cplx(0.0);
  }
  RadialProfile out(std::move(grid), std::move(v), TailClass::compact);
  out.singular_ = std::move(form);
  return out;
}

RadialProfile RadialProfile::zero(GridPtr grid) {
  std::vector<cplx> v(grid->storage_size(), 0.0);
  return RadialProfile(std::move(grid), std::move(v), TailClass::compact);
}

cplx RadialProfile::operator()(double r) const {
  if (r < 0.0) r = -r;
  if (singular_) return (*singular_)(r);
  if (r > grid_->r_max()) return 0.0;
  const int p = grid_->panel_of(r);
  return grid_->interpolate(values_.data() + static_cast<std::size_t>(p) * kOrder, p, r);
}

std::vector<cplx> RadialProfile::unique_values() const {
  std::vector<cplx> out(grid_->unique_size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = values_[grid_->unique_to_storage(k)];
  return out;
}

RadialProfile RadialProfile::operator+(const RadialProfile& o) const {
  check_same_grid(*this, o);
  std::vector<cplx> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  return RadialProfile(grid_, std::move(v), tail_ == TailClass::rapid || o.tail_ == TailClass::rapid
                                                ? TailClass::rapid : TailClass::compact);
}

RadialProfile RadialProfile::operator-(const RadialProfile& o) const { return *this + o * cplx(-1.0); }

RadialProfile RadialProfile::operator*(cplx a) const {
  std::vector<cplx> v(values_);
  for (cplx& x : v) x *= a;
  RadialProfile out(grid_, std::move(v), tail_);
  if (singular_) {
    SingularForm f = *singular_;
    auto reg = f.regular;
    f.regular = [reg, a](double r) { return a * reg(r); };
    out.singular_ = std::move(f);
  }
  return out;
}

double WeightedMeasure::shell(double a, double b) const {
  const double e = 2.0 * nu + 2.0;
  return (std::pow(b, e) - std::pow(a, e)) / e;
}

double sup_norm(const RadialProfile& f) {
  if (f.singular() && f.singular()->exponent.real() > 0.0) return kInf;
  const auto& g = *f.grid();
  double m = 0.0;
  for (const cplx& v : f.values()) m = std::max(m, std::abs(v));
  constexpr int kDense = 64;
  for (int p = 0; p < g.panels(); ++p) {
    const cplx* pv = f.values().data() + static_cast<std::size_t>(p) * kOrder;
    for (int j = 1; j < kDense; ++j) {
      const double r = g.breaks()[p] + g.width(p) * j / kDense;
      const cplx v = f.singular() ? (*f.singular())(r) : g.interpolate(pv, p, r);
      m = std::max(m, std::abs(v));
    }
  }
  return m;
}

double lp_norm(const RadialProfile& f, double p, const WeightedMeasure& mu) {
  if (std::isnan(p) || p < 1.0) throw ArgumentError("lp_norm: p must be >= 1");
  if (std::isinf(p)) return sup_norm(f);
  const double e = mu.exponent();
  if (const auto& s = f.singular()) {
    const double a = p * s->exponent.real();
    if (a >= 1.0) return kInf;
    auto g = [&](double r) -> cplx { return std::pow(std::abs(s->regular(r)), p) * std::pow(r, e); };
    quad::SingularOptions opts;
    opts.max_panel_width = 0.125 * s->edge;
    const double v = quad::integrate_to_singular_edge(g, 0.0, s->edge, a, opts).real();
    return std::pow(std::max(v, 0.0), 1.0 / p);
  }
  const auto& g = *f.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < g.storage_size(); ++i) {
    const double a = std::abs(f.values()[i]);
    if (a == 0.0) continue;
    sum += g.weights()[i] * std::pow(a, p) * std::pow(g.nodes()[i], e);
  }
  return std::pow(sum, 1.0 / p);
}

namespace {

// Adds the measure of {r in [x0, x1] : h(r) > 0}, assuming at most one sign change.
template <class H>
double level_piece(const H& h, double x0, double h0, double x1, double h1, const WeightedMeasure& mu) {
  if (h0 > 0.0 && h1 > 0.0) return mu.shell(x0, x1);
  if (h0 <= 0.0 && h1 <= 0.0) return 0.0;
  double lo = x0, hi = x1;
  const bool rising = h1 > 0.0;
  for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((h(mid) > 0.0) == rising) hi = mid;
    else lo = mid;
  }
  const double c = 0.5 * (lo + hi);
  return rising ? mu.shell(c, x1) : mu.shell(x0, c);
}

}  // namespace

double distribution_function(const RadialProfile& f, double s, const WeightedMeasure& mu) {
  if (!(s > 0.0)) throw ArgumentError("distribution_function: s must be positive");
  double total = 0.0;
  if (const auto& form = f.singular()) {
    auto h = [&](double r) { return std::abs((*form)(r)) - s; };
    std::vector<double> xs;
    const double e = form->edge;
    constexpr int kUniform = 256;
    for (int j = 0; j <= kUniform; ++j) xs.push_back(0.5 * e * j / kUniform);
    for (int j = 2; j <= 60; ++j) xs.push_back(e - e * std::ldexp(1.0, -j));
    for (std::size_t j = 0; j + 1 < xs.size(); ++j)
      total += level_piece(h, xs[j], h(xs[j]), xs[j + 1], h(xs[j + 1]), mu);
    if (form->exponent.real() > 0.0) total += mu.shell(xs.back(), e);
    return total;
  }
  const auto& g = *f.grid();
  constexpr int kSub = 32;
  for (int p = 0; p < g.panels(); ++p) {
    const cplx* pv = f.values().data() + static_cast<std::size_t>(p) * kOrder;
    auto h = [&](double r) { return std::abs(g.interpolate(pv, p, r)) - s; };
    const double a = g.breaks()[p], w = g.width(p);
    double x0 = a, h0 = std::abs(pv[0]) - s;
    for (int j = 1; j <= kSub; ++j) {
      const double x1 = j == kSub ? g.breaks()[p + 1] : a + w * j / kSub;
      const double h1 = j == kSub ? std::abs(pv[kOrder - 1]) - s : h(x1);
      total += level_piece(h, x0, h0, x1, h1, mu);
      x0 = x1;
      h0 = h1;
    }
  }
  return total;
}

double weak_norm(const RadialProfile& f, double r, const WeightedMeasure& mu) {
  if (!(r > 1.0)) throw ArgumentError("weak_norm: r must be > 1");
  const double top = sup_norm(f);
  if (top == 0.0) return 0.0;
  std::vector<double> ss;
  if (std::isinf(top)) {
    const double ref = std::max(std::abs(f(0.0)), 1e-300);
    for (int j = 0; j <= 840; ++j) ss.push_back(ref * std::pow(10.0, -6.0 + j / 60.0));
  } else {
    for (int j = 0; j < 600; ++j) ss.push_back(top * std::pow(10.0, -10.0 + j / 60.0));
    for (int j = 1; j <= 12; ++j) ss.push_back(top * (1.0 - std::pow(10.0, -j)));
  }
  double best = 0.0;
  for (double s : ss) best = std::max(best, s * std::pow(distribution_function(f, s, mu), 1.0 / r));
  return best;
}

RadialProfile dilate(const RadialProfile& f, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ArgumentError("dilate: lambda must be positive");
  auto grid = f.grid()->scaled(1.0 / lambda);
  if (const auto& form = f.singular()) {
    SingularForm d = *form;
    auto reg = form->regular;
    const cplx scale = std::exp(-form->exponent * std::log(lambda));
    d.regular = [reg, lambda, scale](double r) { return scale * reg(lambda * r); };
    d.edge = form->edge / lambda;
    return RadialProfile::from_singular(grid, std::move(d));
  }
  return RadialProfile(grid, f.values(), f.tail());
}

RadialProfile derivative(const RadialProfile& f) {
  if (f.singular()) throw DomainError("derivative: profile has a singular form");
  static const std::array<std::array<double, kOrder>, kOrder> diff = [] {
    const auto& t = lobatto();
    std::array<std::array<double, kOrder>, kOrder> d{};
    for (int i = 0; i < kOrder; ++i) {
      double diag = 0.0;
      for (int j = 0; j < kOrder; ++j) {
        if (i == j) continue;
        d[i][j] = (t.bary[j] / t.bary[i]) / (t.x[i] - t.x[j]);
        diag -= d[i][j];
      }
      d[i][i] = diag;
    }
    return d;
  }();
  const auto& g = *f.grid();
  std::vector<cplx> out(g.storage_size());
  for (int p = 0; p < g.panels(); ++p) {
    const double scale = 2.0 / g.width(p);
    const cplx* v = f.values().data() + static_cast<std::size_t>(p) * kOrder;
    for (int i = 0; i < kOrder; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < kOrder; ++j) acc += diff[i][j] * v[j];
      out[static_cast<std::size_t>(p) * kOrder + i] = scale * acc;
    }
  }
  return RadialProfile(f.grid(), std::move(out), f.tail());
}

cplx extrapolate_to_origin(const RadialProfile& f) {
  const auto& g = *f.grid();
  const double* r = g.nodes().data();
  const cplx* v = f.values().data();
  cplx num = 0.0;
  double den = 0.0;
  for (int i = 1; i < kOrder; ++i) {
    double w = 1.0;
    for (int j = 1; j < kOrder; ++j)
      if (j != i) w /= (r[i] - r[j]);
    const double c = w / (0.0 - r[i]);
    num += c * v[i];
    den += c;
  }
  return num / den;
}

RadialProfile resample(const RadialProfile& f, GridPtr grid) {
  if (f.singular()) return RadialProfile::from_singular(std::move(grid), *f.singular());
  const auto tail = f.tail();
  return RadialProfile::sample(std::move(grid), [&](double r) { return f(r); }, tail);
}

}  // namespace dunkl
