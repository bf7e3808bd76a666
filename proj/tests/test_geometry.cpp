#include <gtest/gtest.h>

#include "dunkl/errors.hpp"
#include "dunkl/geometry.hpp"

using namespace dunkl;

TEST(Geometry, DimensionAndOrder) {
  const DunklGeometry g(3, 1.25);
  EXPECT_DOUBLE_EQ(g.dim(), 5.5);
  EXPECT_DOUBLE_EQ(g.nu(), 1.75);
  EXPECT_DOUBLE_EQ(reduced_bessel_order(g), 1.75);
  EXPECT_DOUBLE_EQ(homogeneous_dimension(g), 5.5);
  EXPECT_DOUBLE_EQ(DunklGeometry(1, 0.0).nu(), -0.5);
}

TEST(Geometry, RejectsBadParameters) {
  EXPECT_THROW(DunklGeometry(0, 0.0), ArgumentError);
  EXPECT_THROW(DunklGeometry(2, -0.1), ArgumentError);
  EXPECT_THROW(ExponentPair(1.0, 2.0), ArgumentError);
  EXPECT_THROW(ExponentPair(2.0, 0.5), ArgumentError);
}

TEST(Lines, ThreeDimensionalEuclidean) {
  const DunklGeometry g(3, 0.0);
  EXPECT_NEAR(line_q1(2.0, g), 6.0, 1e-12);
  EXPECT_NEAR(line_q1(4.0 / 3.0, g), 4.0, 1e-12);
  EXPECT_NEAR(line_q2(1.2, g), 2.0, 1e-12);
  const auto i1 = line_q1_interval(g);
  const auto i2 = line_q2_interval(g);
  EXPECT_FALSE(i1.empty);
  EXPECT_NEAR(i1.lo, 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(i1.hi, 2.0, 1e-14);
  EXPECT_NEAR(i2.lo, 1.2, 1e-14);
  EXPECT_NEAR(i2.hi, i1.lo, 1e-14);
}

TEST(Lines, LinesMeetAtTheSharedEndpoint) {
  for (const auto& g : {DunklGeometry(2, 0.5), DunklGeometry(3, 1.25), DunklGeometry(1, 1.0)}) {
    const double p = line_q1_interval(g).lo;
    EXPECT_NEAR(line_q1(p, g), line_q2(p, g), 1e-9 * line_q1(p, g));
  }
}

TEST(Lines, EmptyInOneDimension) {
  const DunklGeometry g(1, 0.0);
  EXPECT_TRUE(line_q1_interval(g).empty);
  EXPECT_THROW(line_q1(1.5, g), RangeError);
  EXPECT_THROW(line_q2(1.5, g), RangeError);
}

TEST(Lines, OutsideIntervalThrows) {
  const DunklGeometry g(3, 0.0);
  EXPECT_THROW(line_q1(1.1, g), RangeError);
  EXPECT_THROW(line_q2(1.5, g), RangeError);
}

TEST(SAlphaCases, CaseLabelsRoundTrip) {
  for (auto c : {SAlphaCase::a, SAlphaCase::b, SAlphaCase::c_i, SAlphaCase::c_ii}) EXPECT_EQ(s_alpha_case_from_string(to_string(c)), c);
  EXPECT_THROW(s_alpha_case_from_string("d"), ArgumentError);
}

TEST(SAlphaCases, WaveExponentsAtCriticalAlpha) {
  const DunklGeometry g(3, 0.0);
  EXPECT_TRUE(s_alpha_case_holds(SAlphaCase::c_i, 1.0, ExponentPair(2.0, 6.0), g));
  EXPECT_FALSE(s_alpha_case_holds(SAlphaCase::c_i, 1.0, ExponentPair(2.0, 15.0), g));
  EXPECT_TRUE(s_alpha_case_holds(SAlphaCase::b, 1.0, ExponentPair(4.0 / 3.0, 4.0), g));
  EXPECT_EQ(classify_s_alpha(1.0, ExponentPair(2.0, 15.0), g), SAlphaCase::none);
  EXPECT_EQ(classify_s_alpha(0.0, ExponentPair(2.0, 2.0), g), SAlphaCase::a);
}

TEST(SAlphaCases, AlphaOutOfRangeThrows) {
  EXPECT_THROW(classify_s_alpha(-0.5, ExponentPair(2.0, 2.0), DunklGeometry(3, 0.0)), RangeError);
}
