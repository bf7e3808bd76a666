#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/harness.hpp"
#include "dunkl/special_functions.hpp"

using namespace dunkl;

TEST(Report, PassRuleAndCombination) {
  const auto a = make_report("a", 1e-9, 1e-8);
  const auto b = make_report("b", 5e-7, 1e-6);
  const auto c = make_report("c", std::nan(""), 1.0);
  EXPECT_TRUE(a.pass);
  EXPECT_FALSE(c.pass);
  const auto ab = combine_reports("ab", {a, b});
  EXPECT_TRUE(ab.pass);
  EXPECT_DOUBLE_EQ(ab.residual, 5e-7);
  EXPECT_FALSE(combine_reports("abc", {a, b, c}).pass);
}

TEST(Oracle, BesselSeriesAgreesWithLibrary) {
  for (double nu : {-0.5, 0.25, 3.0}) {
    for (double t : {0.0, 1.0, 6.0}) {
      EXPECT_NEAR(static_cast<double>(oracle::scaled_bessel_series(nu, t)), scaled_bessel(nu, t), 1e-13) << nu << " " << t;
    }
  }
}

TEST(Oracle, KernelSeriesAgreesWithClosedForm) {
  for (double k : {0.0, 1.0, 2.5}) {
    EXPECT_LT(std::abs(oracle::dunkl_kernel_series(1.3, 2.1, k) - dunkl_kernel_rank1(1.3, 2.1, k)), 1e-12);
  }
}

TEST(Oracle, DAlembertAtTimeZero) {
  EXPECT_NEAR(oracle::dalembert_gaussian(0.7, 0.0), std::exp(-0.49), 1e-15);
  EXPECT_NEAR(oracle::spherical_means_gaussian(0.7, 0.0), std::exp(-0.49), 1e-12);
  EXPECT_NEAR(oracle::spherical_means_gaussian(0.0, 0.0), 1.0, 1e-12);
}

TEST(TestFamily, ContainsTheStatedProfiles) {
  const auto fam = test_family();
  ASSERT_EQ(fam.size(), 5u);
  for (const auto& t : fam) EXPECT_NEAR(t.f(0.0), 1.0, 1e-12) << t.id;
  EXPECT_EQ(reference_geometries().size(), 5u);
}

TEST(Checks, BesselSuitePasses) {
  for (const auto& r : run_suite("bessel")) EXPECT_TRUE(r.pass) << r.name << " " << r.residual;
}

TEST(Checks, DAlembertAndSphericalMeans) {
  EXPECT_TRUE(check_dalembert().pass);
  EXPECT_TRUE(check_spherical_means().pass);
}

TEST(Checks, RankOneCalculus) {
  EXPECT_TRUE(check_kernel_series(1.0).pass);
  EXPECT_TRUE(check_kernel_ode(1.0).pass);
  EXPECT_TRUE(check_riesz_square(1.0).pass);
}

TEST(Sweeps, InadmissiblePairNeedsTheProbeFlag) {
  const DunklGeometry g(3, 0.0);
  EXPECT_THROW(sweep_s_alpha(1.0, SAlphaCase::c_i, 2.0, 15.0, g, false), ArgumentError);
}

TEST(Sweeps, WaveLineLabels) {
  EXPECT_EQ(wave_line_from_string(to_string(WaveLine::q2)), WaveLine::q2);
  EXPECT_THROW(wave_line_from_string("q3"), ArgumentError);
}

TEST(Sweeps, VacuousInOneDimension) {
  const auto r = sweep_wave_rank1({1.5}, WaveLine::q1, {1.0}, 0.0);
  EXPECT_TRUE(r.rows.empty());
  EXPECT_EQ(r.verdict, Verdict::bounded);
}

TEST(Sweeps, APsiRangeError) {
  const DunklGeometry g(1, 1.0);
  EXPECT_THROW(check_apsi(g, g.dim() - 0.5), RangeError);
}

TEST(Suites, NamesAndUnknown) {
  const auto names = suite_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "identities"), names.end());
  EXPECT_THROW(run_suite("nope"), ArgumentError);
}
