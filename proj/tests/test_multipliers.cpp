#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/multipliers.hpp"
#include "dunkl/special_functions.hpp"

using namespace dunkl;

namespace {

cplx gauss(double r) { return std::exp(-0.5 * r * r); }

}  // namespace

TEST(Cutoff, ShapeAndSymmetry) {
  EXPECT_EQ(cutoff_psi(0.5), 0.0);
  EXPECT_EQ(cutoff_psi(1.0), 0.0);
  EXPECT_EQ(cutoff_psi(2.0), 1.0);
  EXPECT_EQ(cutoff_psi(7.0), 1.0);
  EXPECT_NEAR(cutoff_psi(1.5), 0.5, 1e-15);
  for (double x : {1.1, 1.3, 1.45}) EXPECT_NEAR(cutoff_psi(x) + cutoff_psi(3.0 - x), 1.0, 1e-15);
  double prev = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = cutoff_psi(1.0 + i / 100.0);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(PhiZ, TransformMatchesSymbol) {
  const DunklGeometry g(3, 0.0);
  for (cplx z : {cplx(0.3, 0.0), cplx(0.5, 2.0)}) {
    const auto F = hankel_forward(phi_z(z, g), g);
    const auto m = multiplier_m_z(z, g);
    for (double rho : {0.0, 0.5, 3.0, 11.0}) {
      EXPECT_LT(std::abs(F(rho) - m(rho)), 1e-7 * std::abs(m(0.0))) << z << " " << rho;
    }
  }
}

TEST(PhiZ, IndicatorAtZero) {
  const DunklGeometry g(2, 0.5);
  const auto f = phi_z(0.0, g);
  EXPECT_EQ(f(0.5), cplx(1.0));
  EXPECT_EQ(f(1.5), cplx(0.0));
  EXPECT_THROW(phi_z(cplx(1.0, 0.0), g), DomainError);
}

TEST(PhiZ, SymbolOriginValue) {
  const DunklGeometry g(3, 1.25);
  const cplx z(0.4, -1.0);
  const cplx order = g.gamma() + 1.5 - z;
  const cplx expect = std::exp((z - g.gamma() - 1.5) * std::log(2.0)) / gamma_complex(order + 1.0);
  EXPECT_LT(std::abs(multiplier_m_z(z, g)(0.0) - expect), 1e-14);
  EXPECT_THROW(multiplier_m_z(cplx(0.0, 80.0), g), DomainError);
}

TEST(SZ, AgreesWithConvolutionByPhi) {
  const DunklGeometry g(3, 0.0);
  const auto f = RadialProfile::sample(default_grid(), gauss);
  const auto s = s_z_apply(0.0, f, g);
  const auto t = t_z_apply(0.0, f, g);
  double worst = 0.0;
  for (double r : {0.0, 0.7, 2.0, 5.0}) worst = std::max(worst, std::abs(s(r) - t(r)));
  EXPECT_LT(worst, 1e-7);
  EXPECT_THROW(t_z_apply(cplx(1.2, 0.0), f, g), DomainError);
}

TEST(Wave, InitialData) {
  const DunklGeometry g(3, 1.0);
  const auto f = RadialProfile::sample(default_grid(), [](double r) { return cplx(r * r * std::exp(-r * r)); });
  const auto pos = RadialProfile::sample(default_grid(), gauss);
  const WaveState s0{f, pos, 0.0, g};
  const auto u = wave_propagate(s0);
  const auto v = wave_velocity(s0);
  for (double r : {0.0, 0.6, 2.2}) {
    EXPECT_LT(std::abs(u(r) - gauss(r)), 1e-9);
    EXPECT_LT(std::abs(v(r) - r * r * std::exp(-r * r)), 1e-9);
  }
}

TEST(Wave, OneDimensionalDAlembert) {
  const DunklGeometry g(1, 0.0);
  const auto zero = RadialProfile::zero(default_grid());
  const auto pos = RadialProfile::sample(default_grid(), gauss);
  const double t = 3.0;
  const auto u = wave_propagate({zero, pos, t, g});
  for (double r : {0.0, 1.0, 3.0, 6.5}) EXPECT_LT(std::abs(u(r) - 0.5 * (gauss(r - t) + gauss(r + t))), 1e-9);
}

TEST(Wave, LongTimeNeedsALargerGrid) {
  const DunklGeometry g(3, 0.0);
  const auto f = RadialProfile::sample(default_grid(), gauss);
  EXPECT_THROW(wave_propagate({f, f, 100.0, g}), ResolutionError);
  EXPECT_THROW(wave_propagate({f, f, std::nan(""), g}), ArgumentError);
}

TEST(CosMultiplier, PartsAddUp) {
  const DunklGeometry g(3, 0.0);
  const auto f = RadialProfile::sample(default_grid(), gauss);
  const auto full = cos_multiplier_apply(f, CosPart::full, g);
  const auto sum = cos_multiplier_apply(f, CosPart::low, g) + cos_multiplier_apply(f, CosPart::high, g);
  for (double r : {0.0, 1.0, 4.0}) EXPECT_LT(std::abs(full(r) - sum(r)), 1e-12);
  EXPECT_EQ(cos_part_from_string("high"), CosPart::high);
  EXPECT_THROW(cos_part_from_string("mid"), ArgumentError);
  EXPECT_THROW(cos_multiplier_apply(RadialProfile::sample(default_grid(), gauss), CosPart::full, DunklGeometry(1, 0.0)),
               DomainError);
}

TEST(APsi, SymbolVanishesNearOrigin) {
  const auto m = a_psi_multiplier();
  EXPECT_EQ(m(0.0), cplx(0.0));
  EXPECT_EQ(m(0.9), cplx(0.0));
  EXPECT_NEAR(m(4.0).real(), 0.25, 1e-15);
}

TEST(UZ, EnvelopeAndGeometry) {
  EXPECT_THROW(u_z_multiplier(cplx(0.5, 70.0), 1.0), DomainError);
  EXPECT_THROW(psi_j_profile(1.0, DunklGeometry(2, 0.0)), ArgumentError);
  const auto m = u_z_multiplier(cplx(0.5, 1.0), 1.0);
  EXPECT_EQ(m.even(3.0), cplx(0.0));
  EXPECT_EQ(m.odd(0.5), cplx(0.0));
}
