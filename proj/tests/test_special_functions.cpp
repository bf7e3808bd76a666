#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

using namespace dunkl;

namespace {

// mpmath at 30 digits
struct GammaValue {
  cplx z;
  cplx value;
};

const GammaValue kGamma[] = {
    {{1.0, -2.0}, {0.15190400267003614, -0.019804880161854982}},
    {{0.3, 5.0}, {-0.00064861367048292207, 0.00027746302681981273}},
    {{-1.5, 0.5}, {0.93791666278788505, 0.34920566814780487}},
    {{7.25, 0.0}, {1155.3810139199897, 0.0}},
    {{0.5, 0.0}, {1.772453850905516, 0.0}},
};

struct BesselValue {
  double nu;
  double t;
  double value;
};

const BesselValue kBessel[] = {
    {0.5, 1.0, 0.67139670714180309},    {2.25, 7.3, -0.29792433786959472}, {10.0, 3.0, 1.2928351645715884e-5},
    {0.0, 50.0, 0.055812327669251815},  {1.5, 120.0, -0.058949728416617961}, {20.5, 25.0, 0.11369883509492513},
    {0.0, 1e-3, 0.99999975000001562},   {3.75, 1e-3, 2.5199412995597111e-14},
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Gamma, MatchesFrozenValues) {
  for (const auto& g : kGamma) EXPECT_LT(rel(gamma_complex(g.z), g.value), 1e-13) << g.z;
}

TEST(Gamma, ReciprocalModulusAtOneMinusTwoI) {
  EXPECT_NEAR(1.0 / std::abs(gamma_complex({1.0, -2.0})), 6.527857487280458, 1e-12);
}

TEST(Gamma, LogGammaExponentiates) {
  for (const auto& g : kGamma) EXPECT_LT(rel(std::exp(log_gamma(g.z)), g.value), 1e-12);
}

TEST(Gamma, PolesThrow) {
  EXPECT_THROW(gamma_complex(0.0), DomainError);
  EXPECT_THROW(gamma_complex(-3.0), DomainError);
  EXPECT_THROW(log_gamma(-1.0), DomainError);
}

TEST(Bessel, MatchesFrozenValues) {
  for (const auto& b : kBessel) {
    EXPECT_LT(rel(bessel_j(b.nu, b.t), b.value), 1e-13) << b.nu << " " << b.t;
  }
}

TEST(Bessel, LargeOrderTransitionRegion) {
  EXPECT_LT(rel(bessel_j(20.5, 40.0), 0.13390462025969236), 1e-12);
  EXPECT_LT(rel(bessel_j(40.0, 60.0), -0.077646197404715065), 1e-12);
  EXPECT_LT(rel(bessel_j(40.0, 40.0), 0.13078054528516672), 1e-12);
}

TEST(Bessel, HalfOrderClosedForm) {
  for (double t : {0.1, 1.0, 7.0, 40.0}) {
    EXPECT_NEAR(bessel_j(0.5, t), std::sqrt(2.0 / (M_PI * t)) * std::sin(t), 1e-14);
    EXPECT_NEAR(bessel_j(-0.5, t), std::sqrt(2.0 / (M_PI * t)) * std::cos(t), 1e-14);
  }
}

TEST(Bessel, ScaledValueAtOrigin) {
  for (double nu : {-0.5, 0.0, 1.25, 4.0}) {
    EXPECT_NEAR(scaled_bessel(nu, 0.0), std::pow(2.0, -nu) / std::tgamma(nu + 1.0), 1e-15);
  }
}

TEST(Bessel, DomainErrors) {
  EXPECT_THROW(bessel_j(-0.75, 1.0), DomainError);
  EXPECT_THROW(bessel_j(1.0, -1.0), DomainError);
  EXPECT_THROW(bessel_j(-0.5, 0.0), DomainError);
  EXPECT_THROW(scaled_bessel(cplx(-0.75, 0.0), 1.0), DomainError);
  EXPECT_THROW(scaled_bessel_any_order(cplx(-3.0, 0.0), 1.0), DomainError);
}

TEST(Bessel, ComplexOrderScaled) {
  EXPECT_LT(rel(scaled_bessel(cplx(0.3, 2.0), 1.7), {-0.22528419731104079, -3.6488989446194018}), 1e-11);
  EXPECT_LT(rel(scaled_bessel(cplx(1.25, -1.0), 10.0), {0.0060273521397110139, 0.02892943135715903}), 1e-10);
}

TEST(Bessel, AnyOrderBelowMinusHalf) {
  EXPECT_LT(rel(scaled_bessel_any_order(cplx(-1.5, 0.5), 2.0), {-2.5896537218862081, -0.77762576507062881}), 1e-11);
  EXPECT_LT(rel(scaled_bessel_any_order(cplx(-2.0, 0.0), 3.0), 4.3748213452730197), 1e-11);
}

TEST(Bessel, PoissonIntegral) {
  EXPECT_LT(rel(poisson_integral_bessel(cplx(0.3, 0.2), 4.0), {-0.379295243285557287, 0.048952927889576526}), 1e-10);
}

TEST(Bessel, RealAndComplexPathsAgree) {
  for (double nu : {0.0, 0.7, 3.5}) {
    for (double t : {0.01, 2.0, 15.0, 90.0}) {
      EXPECT_NEAR(scaled_bessel(cplx(nu, 0.0), t).real(), scaled_bessel(nu, t), 1e-12 * (1.0 + scaled_bessel(0.0, 0.0)));
    }
  }
}

TEST(BesselTable, InterpolatesDirectEvaluation) {
  const auto tab = ScaledBesselTable::get(1.5, 200.0);
  EXPECT_EQ(tab, ScaledBesselTable::get(1.5, 200.0));
  double worst = 0.0;
  for (int i = 0; i <= 997; ++i) {
    const double x = 200.0 * i / 997.0;
    worst = std::max(worst, std::abs((*tab)(x) - scaled_bessel(1.5, x)));
  }
  EXPECT_LT(worst, 1e-13);
}
