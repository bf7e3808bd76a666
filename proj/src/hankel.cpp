#include "dunkl/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <mutex>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {
namespace {

constexpr std::size_t kMaxPlanEntries = 40'000'000;
constexpr std::size_t kMaxCachedEntries = 80'000'000;
constexpr std::size_t kMaxPlans = 4;

struct Plan {
  double nu;
  GridPtr src;
  GridPtr dst;
  std::vector<double> matrix;  // dst unique x src storage
};

class PlanCache {
 public:
  std::shared_ptr<const Plan> find(double nu, const GridPtr& src, const GridPtr& dst) {
    std::lock_guard lock(mu_);
    for (auto it = plans_.begin(); it != plans_.end(); ++it) {
      const auto& p = **it;
      if (p.nu == nu && p.src == src && p.dst == dst) {
        plans_.splice(plans_.begin(), plans_, it);
        return plans_.front();
      }
    }
    return nullptr;
  }

  void insert(std::shared_ptr<const Plan> plan) {
    std::lock_guard lock(mu_);
    plans_.push_front(std::move(plan));
    std::size_t total = 0;
    auto it = plans_.begin();
    std::size_t count = 0;
    for (; it != plans_.end(); ++it, ++count) {
      total += (*it)->matrix.size();
      if (count >= kMaxPlans || (count > 0 && total > kMaxCachedEntries)) break;
    }
    plans_.erase(it, plans_.end());
  }

  void clear() {
    std::lock_guard lock(mu_);
    plans_.clear();
  }

 private:
  std::mutex mu_;
  std::list<std::shared_ptr<const Plan>> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<cplx> expand_to_storage(const GridPtr& g, const std::vector<cplx>& unique) {
  std::vector<cplx> out(g->storage_size());
  const int order = RadialGrid::kOrder;
  for (int p = 0; p < g->panels(); ++p)
    for (int i = 0; i < order; ++i)
      out[static_cast<std::size_t>(p) * order + i] = unique[static_cast<std::size_t>(p) * (order - 1) + i];
  return out;
}

std::vector<cplx> transform_singular(const SingularForm& form, double nu, const std::vector<double>& rhos) {
  const auto table = ScaledBesselTable::get(nu, rhos.empty() ? 1.0 : rhos.back() * form.edge + 1.0);
  const double e = 2.0 * nu + 1.0;
  std::vector<cplx> out(rhos.size());
  parallel_for(rhos.size(), [&](std::size_t i) {
    const double rho = rhos[i];
    auto g = [&](double r) { return form.regular(r) * ((*table)(rho * r) * std::pow(r, e)); };
    quad::SingularOptions opts;
    opts.max_panel_width = std::min(0.125 * form.edge, 3.0 / std::max(rho, 1e-300));
    out[i] = quad::integrate_to_singular_edge(g, 0.0, form.edge, form.exponent, opts);
  });
  return out;
}

std::shared_ptr<const Plan> build_plan(double nu, const GridPtr& src, const GridPtr& dst) {
  auto plan = std::make_shared<Plan>();
  plan->nu = nu;
  plan->src = src;
  plan->dst = dst;
  const auto rhos = dst->unique_nodes();
  const std::size_t ns = src->storage_size();
  const auto table = ScaledBesselTable::get(nu, rhos.back() * src->r_max() + 1.0);
  std::vector<double> colw(ns);
  const double e = 2.0 * nu + 1.0;
  for (std::size_t j = 0; j < ns; ++j) colw[j] = src->weights()[j] * std::pow(src->nodes()[j], e);
  plan->matrix.resize(rhos.size() * ns);
  parallel_for(rhos.size(), [&](std::size_t i) {
    double* row = plan->matrix.data() + i * ns;
    for (std::size_t j = 0; j < ns; ++j) row[j] = colw[j] * (*table)(rhos[i] * src->nodes()[j]);
  });
  return plan;
}

}  // namespace

cplx RadialMultiplier::operator()(double rho) const {
  if (rho == 0.0) return singular_origin ? cplx(0.0) : origin_value;
  return symbol(rho);
}

RadialMultiplier RadialMultiplier::constant(cplx c) {
  return RadialMultiplier{[c](double) { return c; }, false, c, "constant"};
}

RadialMultiplier RadialMultiplier::from_function(std::function<cplx(double)> f, std::string note) {
  RadialMultiplier m;
  m.origin_value = f(0.0);
  m.symbol = std::move(f);
  m.note = std::move(note);
  return m;
}

void check_resolution(const RadialProfile& f, double rho_max) {
  if (f.singular()) return;
  const auto& g = *f.grid();
  const double fmax = max_abs(f.values());
  if (fmax == 0.0) return;
  const int order = RadialGrid::kOrder;
  for (int p = 0; p < g.panels(); ++p) {
    double pm = 0.0;
    for (int i = 0; i < order; ++i) pm = std::max(pm, std::abs(f.values()[static_cast<std::size_t>(p) * order + i]));
    if (pm <= 1e-14 * fmax) continue;
    const double phase = 0.5 * rho_max * g.width(p);
    if (phase > kMaxPanelPhase) {
      std::ostringstream os;
      os << "transform: panel [" << g.breaks()[p] << ", " << g.breaks()[p + 1] << "] cannot resolve rho up to "
         << rho_max << " (half-panel phase " << phase << " > " << kMaxPanelPhase << ")";
      throw ResolutionError(os.str());
    }
  }
}

RadialProfile hankel_transform(const RadialProfile& f, double nu, const GridPtr& out) {
  if (nu < -0.5) throw DomainError("transform: order below -1/2");
  const auto rhos = out->unique_nodes();
  if (const auto& form = f.singular())
    return RadialProfile(out, expand_to_storage(out, transform_singular(*form, nu, rhos)), TailClass::rapid);

  check_resolution(f, out->r_max());
  const auto& src = f.grid();
  const std::size_t ns = src->storage_size();
  std::vector<cplx> result(rhos.size());

  auto plan = cache().find(nu, src, out);
  if (!plan && rhos.size() * ns <= kMaxPlanEntries) {
    plan = build_plan(nu, src, out);
    cache().insert(plan);
  }
  const auto& v = f.values();
  if (plan) {
    parallel_for(rhos.size(), [&](std::size_t i) {
      const double* row = plan->matrix.data() + i * ns;
      double re = 0.0, im = 0.0;
      for (std::size_t j = 0; j < ns; ++j) {
        re += row[j] * v[j].real();
        im += row[j] * v[j].imag();
      }
      result[i] = {re, im};
    });
  } else {
    std::vector<std::size_t> live;
    for (std::size_t j = 0; j < ns; ++j)
      if (v[j] != 0.0) live.push_back(j);
    const auto table = ScaledBesselTable::get(nu, rhos.back() * src->r_max() + 1.0);
    const double e = 2.0 * nu + 1.0;
    std::vector<double> colw(ns);
    for (std::size_t j : live) colw[j] = src->weights()[j] * std::pow(src->nodes()[j], e);
    parallel_for(rhos.size(), [&](std::size_t i) {
      cplx acc = 0.0;
      for (std::size_t j : live) acc += v[j] * (colw[j] * (*table)(rhos[i] * src->nodes()[j]));
      result[i] = acc;
    });
  }
  return RadialProfile(out, expand_to_storage(out, result), TailClass::rapid);
}

RadialProfile hankel_forward(const RadialProfile& f, const DunklGeometry& geom) {
  return hankel_transform(f, geom.nu(), f.grid());
}

RadialProfile multiply_symbol(const RadialProfile& transformed, const RadialMultiplier& m) {
  const auto& g = transformed.grid();
  std::vector<cplx> v = transformed.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= m(g->nodes()[i]);
  return RadialProfile(g, std::move(v), transformed.tail());
}

RadialProfile apply_radial_multiplier(const RadialProfile& f, const RadialMultiplier& m, double nu,
                                      const GridPtr& rho_grid, const GridPtr& out) {
  const RadialProfile ff = hankel_transform(f, nu, rho_grid);
  return hankel_transform(multiply_symbol(ff, m), nu, out);
}

RadialProfile apply_radial_multiplier(const RadialProfile& f, const RadialMultiplier& m,
                                      const DunklGeometry& geom) {
  return apply_radial_multiplier(f, m, geom.nu(), f.grid(), f.grid());
}

RadialProfile radial_convolve(const RadialProfile& f, const RadialProfile& g, const DunklGeometry& geom) {
  const auto& grid = f.grid();
  const RadialProfile ff = hankel_transform(f, geom.nu(), grid);
  const RadialProfile fg = hankel_transform(g, geom.nu(), grid);
  std::vector<cplx> prod(ff.values());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= fg.values()[i];
  return hankel_transform(RadialProfile(grid, std::move(prod), TailClass::rapid), geom.nu(), grid);
}

void clear_transform_cache() { cache().clear(); }

}  // namespace dunkl
