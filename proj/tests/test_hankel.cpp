#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/hankel.hpp"
#include "dunkl/multipliers.hpp"

using namespace dunkl;

namespace {

double max_error(const RadialProfile& f, const std::function<double(double)>& exact, double r_max) {
  double worst = 0.0;
  for (double r : f.grid()->unique_nodes()) {
    if (r <= r_max) worst = std::max(worst, std::abs(f(r) - exact(r)));
  }
  return worst;
}

}  // namespace

TEST(Hankel, GaussianIsAFixedPoint) {
  for (const auto& g : {DunklGeometry(1, 0.0), DunklGeometry(2, 0.5), DunklGeometry(3, 1.25)}) {
    const auto f = RadialProfile::sample(default_grid(), [](double r) { return cplx(std::exp(-0.5 * r * r)); });
    const auto F = hankel_forward(f, g);
    EXPECT_LT(max_error(F, [](double r) { return std::exp(-0.5 * r * r); }, 64.0), 1e-10) << g.nu();
  }
}

TEST(Hankel, ScaledGaussian) {
  const double a = 3.0, nu = 0.75;
  const auto grid = default_grid();
  const auto f = RadialProfile::sample(grid, [a](double r) { return cplx(std::exp(-0.5 * a * r * r)); });
  const auto F = hankel_transform(f, nu, grid);
  EXPECT_LT(max_error(F, [&](double r) { return std::pow(a, -nu - 1.0) * std::exp(-0.5 * r * r / a); }, 64.0), 1e-10);
}

TEST(Hankel, TransformIsAnInvolution) {
  const DunklGeometry g(3, 0.0);
  const auto f = RadialProfile::sample(default_grid(), [](double r) { return cplx(std::exp(-r * r) * (1.0 + r * r)); });
  const auto back = hankel_forward(hankel_forward(f, g), g);
  EXPECT_LT(max_error(back, [](double r) { return std::exp(-r * r) * (1.0 + r * r); }, 64.0), 1e-9);
}

TEST(Hankel, ConvolutionOfGaussians) {
  const DunklGeometry g(2, 0.5);
  const auto gauss = RadialProfile::sample(default_grid(), [](double r) { return cplx(std::exp(-0.5 * r * r)); });
  const auto c = radial_convolve(gauss, gauss, g);
  // F^{-1}(e^{-rho^2}) = 2^{-nu-1} e^{-r^2/4}
  const double nu = g.nu();
  EXPECT_LT(max_error(c, [nu](double r) { return std::pow(2.0, -nu - 1.0) * std::exp(-0.25 * r * r); }, 64.0), 1e-10);
}

TEST(Hankel, ConstantMultiplierIsIdentity) {
  const DunklGeometry g(3, 1.25);
  const auto f = RadialProfile::sample(default_grid(), [](double r) { return cplx(std::exp(-r * r)); });
  const auto h = apply_radial_multiplier(f, RadialMultiplier::constant(2.0), g);
  // roundoff in the spectral tail is weighted by rho^{2 nu + 1} and adds up coherently at r = 0
  EXPECT_LT(max_error(h, [](double r) { return 2.0 * std::exp(-r * r); }, 64.0), 1e-7);
}

TEST(Hankel, OrderBelowRangeThrows) {
  const auto f = RadialProfile::sample(default_grid(), [](double r) { return cplx(std::exp(-r * r)); });
  EXPECT_THROW(hankel_transform(f, -0.6, f.grid()), DomainError);
}

TEST(Hankel, CoarseGridIsRejected) {
  const auto grid = RadialGrid::with_spacing(64.0, 8.0);
  const auto f = RadialProfile::sample(grid, [](double r) { return cplx(std::exp(-0.01 * r * r)); });
  EXPECT_THROW(hankel_forward(f, DunklGeometry(3, 0.0)), ResolutionError);
  EXPECT_THROW(check_resolution(f, 64.0), ResolutionError);
}

TEST(Hankel, MultiplierOriginValue) {
  RadialMultiplier m = RadialMultiplier::from_function([](double rho) { return cplx(1.0 / rho); });
  m.singular_origin = true;
  EXPECT_EQ(m(0.0), cplx(0.0));
  EXPECT_EQ(m(2.0), cplx(0.5));
}
