#include "dunkl/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {
namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k-1)) for k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

cplx stirling(cplx z) {
  const cplx inv = 1.0 / z, inv2 = inv * inv;
  cplx corr = 0.0, pw = inv;
  for (double c : kStirling) {
    corr += c * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + corr;
}

bool is_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Power series of t^{-nu} J_nu(t) given 2^{-nu}/Gamma(nu+1).
// Cancellation stays mild while t^2/4 is at most a few times nu + 1.
template <class T>
T series_scaled(T nu, T lead, double t) {
  const double x = -0.25 * t * t;
  T term = lead, sum = lead;
  for (int m = 1; m < 500; ++m) {
    const double md = m;
    term *= x / (md * (md + nu));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && m > 0.5 * t) break;
  }
  return sum;
}

// Hankel's large-argument expansion of J_nu(t) for real nu.
double asymptotic_j(double nu, double t) {
  const double mu = 4.0 * nu * nu;
  double p = 0.0, q = 0.0, term = 1.0, prev = 2.0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * t);
    const double a = std::abs(term);
    if (k > 1 && a > prev) break;
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) p += sign * term;
    else q += sign * term;
    if (a < 1e-17 || term == 0.0) break;
    prev = a;
  }
  const double phase = (0.5 * nu + 0.25) * kPi;
  const double c = std::cos(t) * std::cos(phase) + std::sin(t) * std::sin(phase);
  const double s = std::sin(t) * std::cos(phase) - std::cos(t) * std::sin(phase);
  return std::sqrt(2.0 / (kPi * t)) * (p * c - q * s);
}

// Integral of (1-u^2)^{nu-1/2} cos(tu) over [0,1].
cplx poisson_core(cplx nu, double t) {
  const cplx e = nu - 0.5;
  auto g = [&](double u) { return std::exp(e * std::log1p(u)) * std::cos(t * u); };
  quad::SingularOptions opts;
  opts.max_panel_width = std::min({0.25, kPi / std::max(t, 1.0), 3.0 / (1.0 + std::abs(nu.imag()))});
  return quad::integrate_to_singular_edge(g, 0.0, 1.0, -e, opts);
}

cplx poisson_scaled(cplx nu, double t) {
  const cplx pre = std::exp((1.0 - nu) * std::log(2.0) - log_gamma(nu + 0.5)) / std::sqrt(kPi);
  return pre * poisson_core(nu, t);
}

bool use_series(double re_nu, double t) { return t <= 8.0 || t * t <= 4.0 * (re_nu + 1.0); }

double gamma_of(double x) { return std::tgamma(x); }
cplx gamma_of(cplx z) { return gamma_complex(z); }
double real_part(double x) { return x; }
double real_part(cplx z) { return z.real(); }

// J_nu(t) by backward recurrence from a high order, normalised with
// (t/2)^a = sum_k (a+2k) Gamma(a+k)/k! J_{a+2k}(t), a = nu - floor(nu).
template <class T>
T miller_j(T nu, double t) {
  const double re = real_part(nu);
  const int shift = re >= 0.0 ? static_cast<int>(std::floor(re)) : 0;
  const T alpha = nu - static_cast<double>(shift);
  int top = shift + static_cast<int>(t) + 60;
  if (top % 2) ++top;
  std::vector<T> w(top / 2 + 1);
  w[0] = gamma_of(alpha + 1.0);
  T g = w[0];
  for (int k = 1; k <= top / 2; ++k) {
    if (k > 1) g *= (alpha + static_cast<double>(k - 1)) / static_cast<double>(k);
    w[k] = (alpha + 2.0 * k) * g;
  }
  T above = 0.0, cur = 1e-30, norm = 0.0, target = 0.0;
  for (int m = top; m >= 0; --m) {
    if (m == shift) target = cur;
    if (m % 2 == 0) norm += w[m / 2] * cur;
    const T below = 2.0 * (alpha + static_cast<double>(m)) / t * cur - above;
    above = cur;
    cur = below;
    if (std::abs(cur) > 1e200) {
      cur *= 1e-200;
      above *= 1e-200;
      norm *= 1e-200;
      target *= 1e-200;
    }
  }
  return target * std::pow(T(0.5 * t), alpha) / norm;
}

double real_scaled(double nu, double t) {
  t = std::abs(t);
  if (nu == 0.5) {
    if (t < 1e-4) return std::sqrt(2.0 / kPi) * (1.0 - t * t / 6.0 + t * t * t * t / 120.0);
    return std::sqrt(2.0 / kPi) * std::sin(t) / t;
  }
  if (nu == -0.5) return std::sqrt(2.0 / kPi) * std::cos(t);
  if (nu < -0.5) {
    if (t == 0.0) return std::exp2(-nu) / std::tgamma(nu + 1.0);
    return 2.0 * (nu + 1.0) * real_scaled(nu + 1.0, t) - t * t * real_scaled(nu + 2.0, t);
  }
  if (use_series(nu, t)) return series_scaled(nu, std::exp2(-nu) / std::tgamma(nu + 1.0), t);
  if (t >= std::max(20.0, 0.5 * nu * nu)) return asymptotic_j(nu, t) * std::pow(t, -nu);
  return miller_j(nu, t) * std::pow(t, -nu);
}

void check_envelope(cplx nu, double t) {
  if (std::abs(nu.imag()) > 64.0)
    throw RangeError("scaled_bessel: |Im nu| = " + std::to_string(std::abs(nu.imag())) +
                     " outside the envelope |Im nu| <= 64");
  if (t > 200.0)
    throw RangeError("scaled_bessel: t = " + std::to_string(t) +
                     " outside the complex-order envelope t <= 200");
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_pole(z)) throw DomainError("gamma: pole at z = " + std::to_string(z.real()));
  if (z.real() < 0.5) return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
  cplx prod = 1.0;
  while (z.real() < 15.0) {
    prod *= z;
    z += 1.0;
  }
  return stirling(z) - std::log(prod);
}

cplx gamma_complex(cplx z) {
  if (is_pole(z)) throw DomainError("gamma: pole at z = " + std::to_string(z.real()));
  if (z.imag() == 0.0) return std::tgamma(z.real());
  return std::exp(log_gamma(z));
}

double bessel_j(double nu, double t) {
  if (nu < -0.5) throw DomainError("bessel_j: order " + std::to_string(nu) + " < -1/2");
  if (t < 0.0) throw DomainError("bessel_j: negative argument");
  if (t == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError("bessel_j: J_nu(0) is infinite for nu < 0; use scaled_bessel");
  }
  if (nu != 0.5 && nu != -0.5 && t >= std::max(20.0, 0.5 * nu * nu)) return asymptotic_j(nu, t);
  if (nu != 0.5 && nu != -0.5 && !use_series(nu, t)) return miller_j(nu, t);
  return std::pow(t, nu) * real_scaled(nu, t);
}

double scaled_bessel(double nu, double t) {
  if (nu < -0.5) throw DomainError("scaled_bessel: order " + std::to_string(nu) + " < -1/2");
  if (t < 0.0) throw DomainError("scaled_bessel: negative argument");
  return real_scaled(nu, t);
}

cplx scaled_bessel_any_order(cplx nu, double t) {
  if (nu.real() < -2.5) throw DomainError("scaled_bessel: Re nu below -5/2");
  if (t < 0.0) throw DomainError("scaled_bessel: negative argument");
  if (nu.imag() == 0.0) return real_scaled(nu.real(), t);
  check_envelope(nu, t);
  if (nu.real() < -0.5)
    return 2.0 * (nu + 1.0) * scaled_bessel_any_order(nu + 1.0, t) -
           t * t * scaled_bessel_any_order(nu + 2.0, t);
  if (use_series(nu.real(), t))
    return series_scaled(nu, std::exp(-nu * std::log(2.0) - log_gamma(nu + 1.0)), t);
  return miller_j(nu, t) * std::exp(-nu * std::log(t));
}

cplx scaled_bessel(cplx nu, double t) {
  if (nu.real() < -0.5) throw DomainError("scaled_bessel: Re nu < -1/2");
  return scaled_bessel_any_order(nu, t);
}

cplx poisson_integral_bessel(cplx nu, double t) {
  if (nu.real() <= -0.5) throw DomainError("poisson_integral_bessel: Re nu <= -1/2");
  if (!(t > 0.0)) throw DomainError("poisson_integral_bessel: t must be positive");
  check_envelope(nu, t);
  return std::exp(nu * std::log(t)) * poisson_scaled(nu, t);
}

ScaledBesselTable::ScaledBesselTable(double nu, double x_max) : nu_(nu) {
  const int panels = std::max(1, static_cast<int>(std::ceil(x_max)));
  x_max_ = panels;
  coeffs_.resize(static_cast<std::size_t>(panels) * kDegree);
  std::array<double, kDegree> cheb{}, vals{};
  for (int k = 0; k < kDegree; ++k) cheb[k] = std::cos(kPi * (k + 0.5) / kDegree);
  for (int p = 0; p < panels; ++p) {
    for (int k = 0; k < kDegree; ++k) vals[k] = scaled_bessel(nu, p + 0.5 * (cheb[k] + 1.0));
    for (int j = 0; j < kDegree; ++j) {
      double s = 0.0;
      for (int k = 0; k < kDegree; ++k) s += vals[k] * std::cos(kPi * j * (k + 0.5) / kDegree);
      coeffs_[static_cast<std::size_t>(p) * kDegree + j] = (j == 0 ? 1.0 : 2.0) * s / kDegree;
    }
  }
}

double ScaledBesselTable::operator()(double x) const {
  x = std::abs(x);
  if (x >= x_max_) return scaled_bessel(nu_, x);
  const int p = static_cast<int>(x);
  const double u = 2.0 * (x - p) - 1.0;
  const double* c = &coeffs_[static_cast<std::size_t>(p) * kDegree];
  double b1 = 0.0, b2 = 0.0;
  for (int j = kDegree - 1; j >= 1; --j) {
    const double b0 = 2.0 * u * b1 - b2 + c[j];
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + c[0];
}

std::shared_ptr<const ScaledBesselTable> ScaledBesselTable::get(double nu, double x_max) {
  static std::mutex mu;
  static std::map<double, std::shared_ptr<const ScaledBesselTable>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(nu);
    if (it != cache.end() && it->second->x_max() >= x_max) return it->second;
  }
  const double target = std::ceil(std::max(x_max, 64.0) / 256.0) * 256.0;
  auto table = std::make_shared<const ScaledBesselTable>(nu, target);
  std::lock_guard lock(mu);
  auto& slot = cache[nu];
  if (!slot || slot->x_max() < table->x_max()) slot = table;
  return slot;
}

}  // namespace dunkl
