#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace hallwheels;
using namespace testing_support;

namespace {

// c1 = A + B, c2 = AB, xi = C + B - A, eta = C, evaluated numerically
std::vector<Rational> source_point(const std::vector<Rational>& abc) {
  const Rational &a = abc[0], &b = abc[1], &c = abc[2];
  return {a + b, a * b, c + b - a, c};
}

}  // namespace

TEST(Restriction, PresentationRelationVanishes) {
  RestrictionMap map = gl2_restriction_map();
  EXPECT_TRUE(verify_restriction_relation(map, "c1^2 - 4*c2 - (xi-eta)^2"));
  EXPECT_FALSE(verify_restriction_relation(map, "c1 - c2"));
  EXPECT_FALSE(verify_restriction_relation(map, "c1^2 - 4*c2 - (xi-eta)^2 + 1"));
}

TEST(Restriction, ImagesOfSimpleRelations) {
  RestrictionMap map = gl2_restriction_map();
  LaurentPoly a = LaurentPoly::variable(0, 3, 0), b = LaurentPoly::variable(1, 3, 0);
  LaurentPoly rel = LaurentPoly::variable(0, 4, 0) - LaurentPoly::variable(1, 4, 0);
  EXPECT_EQ(apply_restriction(map, rel), a + b - a * b);
  EXPECT_EQ(apply_restriction(map, LaurentPoly::constant(7, 4, 0)), LaurentPoly::constant(7, 3, 0));
}

TEST(Restriction, AgreesWithNumericSubstitution) {
  std::mt19937_64 rng(seed());
  RestrictionMap map = gl2_restriction_map();
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly rel = random_poly(rng, 4, 0, 4, 0, 3);
    auto abc = random_point(rng, 3);
    EXPECT_EQ(apply_restriction(map, rel).evaluate(abc), rel.evaluate(source_point(abc)));
  }
}

TEST(Restriction, IsARingMap) {
  std::mt19937_64 rng(seed());
  RestrictionMap map = gl2_restriction_map();
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly p = random_poly(rng, 4, 0, 3, 0, 2), q = random_poly(rng, 4, 0, 3, 0, 2);
    EXPECT_EQ(apply_restriction(map, p * q), apply_restriction(map, p) * apply_restriction(map, q));
    EXPECT_EQ(apply_restriction(map, p + q), apply_restriction(map, p) + apply_restriction(map, q));
  }
}

TEST(Restriction, RejectsBadInput) {
  EXPECT_THROW(RestrictionMap({{"a", "x"}, {"a", "y"}}, {"x", "y"}), InvalidArgument);
  EXPECT_THROW(RestrictionMap({{"a", "x^-1"}}, {"x"}), InvalidArgument);
  EXPECT_THROW(RestrictionMap({{"a", "w"}}, {"x"}), InvalidArgument);
  RestrictionMap map = gl2_restriction_map();
  EXPECT_THROW(apply_restriction(map, LaurentPoly::variable(0, 3, 0)), DimensionMismatch);
  EXPECT_THROW(apply_restriction(map, LaurentPoly::monomial(ExponentVector({-1, 0, 0, 0}, {}))), InvalidArgument);
  EXPECT_THROW(verify_restriction_relation(map, "c1 + zeta"), InvalidArgument);
}

TEST(Gl2Example, SatisfiesTsAssumptions) {
  LinearizedRep rep = gl2_example_rep();
  auto report = check_ts_assumptions(rep);
  EXPECT_TRUE(report.f_invariant);
  EXPECT_TRUE(report.c1_weights_ok);
  EXPECT_TRUE(report.c2_weights_ok);
  EXPECT_TRUE(acts_with_weights(rep, {1, 1}, {1, -1, 0}));
  EXPECT_TRUE(acts_with_weights(rep, {0, 1}, {1, 0, -1}));
  EXPECT_EQ(rep.ts_names, (std::vector<std::string>{"t1", "t2"}));
}

TEST(C1InStabilizers, HoldsForExamples) {
  EXPECT_TRUE(c1_in_stabilizers(gl2_example_rep()));
  for (int n = 1; n <= 3; ++n)
    for (int g = 1; g <= 2; ++g)
      EXPECT_TRUE(c1_in_stabilizers(g_fold_character_stack(build_root_datum(Family::GL, n), g)));
  EXPECT_TRUE(c1_in_stabilizers(g_fold_character_stack(build_root_datum(Family::Sp, 4), 1)));
}

TEST(C1InStabilizers, DetectsBadDirections) {
  LinearizedRep rep = gl2_example_rep();
  rep.c1_direction = std::vector<Exponent>{1, 0};
  EXPECT_FALSE(c1_in_stabilizers(rep));
  rep.c1_direction.reset();
  EXPECT_THROW(c1_in_stabilizers(rep), InvalidArgument);
  rep.c1_direction = std::vector<Exponent>{1};
  EXPECT_THROW(c1_in_stabilizers(rep), DimensionMismatch);
}
