#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace dunkl {

using cplx = std::complex<double>;

/// Principal-branch-free log Gamma: exp(log_gamma(z)) == Gamma(z). Poles throw DomainError.
cplx log_gamma(cplx z);
cplx gamma_complex(cplx z);

/// J_nu(t) for real nu >= -1/2 and t >= 0.
double bessel_j(double nu, double t);

/// t^{-nu} J_nu(t), continuous at t = 0 with value 2^{-nu}/Gamma(nu+1).
double scaled_bessel(double nu, double t);
cplx scaled_bessel(cplx nu, double t);

/// Same as scaled_bessel but accepts any order with Re nu >= -5/2 (the function is entire in t).
cplx scaled_bessel_any_order(cplx nu, double t);

/// J_nu(t) from the Poisson integral over [-1, 1]; Re nu > -1/2, t > 0.
cplx poisson_integral_bessel(cplx nu, double t);

/// Piecewise Chebyshev table of x^{-nu} J_nu(x) on [0, x_max] for one real order.
/// Tables are immutable; get() shares them between callers and threads.
class ScaledBesselTable {
 public:
  static std::shared_ptr<const ScaledBesselTable> get(double nu, double x_max);

  double operator()(double x) const;
  double nu() const { return nu_; }
  double x_max() const { return x_max_; }

  ScaledBesselTable(double nu, double x_max);

 private:
  static constexpr int kDegree = 16;
  double nu_;
  double x_max_;
  std::vector<double> coeffs_;
};

}  // namespace dunkl
