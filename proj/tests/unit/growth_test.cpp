#include "ordspan/error.hpp"
#include "ordspan/growth.hpp"

#include <gtest/gtest.h>

using namespace ordspan;

TEST(GrowthPolynomial, Build) {
  EXPECT_EQ(build_polynomial({0, 2, 1, 3, 7}).to_string(), "x^5 - 2x^3 - x^2 - 3x - 7");
  EXPECT_EQ(build_polynomial({1, 1, 4, 22, 98, 454}).to_string(), "x^6 - x^5 - x^4 - 4x^3 - 22x^2 - 98x - 454");
  EXPECT_EQ(build_polynomial({1}).to_string(), "x - 1");
  EXPECT_EQ(build_polynomial({1}).degree(), 1u);
  EXPECT_THROW(build_polynomial({0, 0}), Error);
  EXPECT_THROW(build_polynomial(std::span<const Integer>{}), Error);
  EXPECT_THROW(build_polynomial({1, -2}), Error);
}

TEST(GrowthPolynomial, Evaluate) {
  EXPECT_EQ(build_polynomial({0, 2, 1, 3, 7}).evaluate(Integer(2)), Integer(-1));
  EXPECT_EQ(build_polynomial({1, 1, 4, 22, 98, 454}).evaluate(Integer(3)), Integer(-649));
  EXPECT_EQ(build_polynomial({1, 3, 13, 59, 369, 2279}).evaluate(Integer(4)), Integer(-3227));
  EXPECT_EQ(build_polynomial({1}).evaluate(Rational(1, 2)), Rational(-1, 2));
}

TEST(LargestRoot, Enclosures) {
  auto lin = largest_real_root(build_polynomial({7}), Rational(1, 1000));
  EXPECT_TRUE(lin.exact());
  EXPECT_EQ(lin.lo, Rational(7));

  auto bin = largest_real_root(build_polynomial({0, 2, 1, 3, 7}), Rational(1, 1 << 20));
  EXPECT_GT(bin.lo, Rational(2));
  EXPECT_LE(bin.hi - bin.lo, Rational(1, 1 << 20));
  auto p = build_polynomial({0, 2, 1, 3, 7});
  EXPECT_LE(sgn(p.evaluate(bin.lo)), 0);
  EXPECT_GE(sgn(p.evaluate(bin.hi)), 0);

  auto ter = largest_real_root(build_polynomial({1, 1, 4, 22, 98, 454}), Rational(1, 1 << 10));
  EXPECT_GT(ter.lo, Rational(3));

  // x^2 - 0x - 4 has the integer root 2.
  auto sq = largest_real_root(build_polynomial({0, 4}), Rational(1, 8));
  EXPECT_TRUE(sq.exact());
  EXPECT_EQ(sq.lo, Rational(2));
  EXPECT_THROW(largest_real_root(build_polynomial({1}), Rational(0)), Error);
}

TEST(Catalan, Values) {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (unsigned long k = 0; k < 10; ++k) EXPECT_EQ(catalan(k), Integer(expected[k]));
  // C(k+1) = sum C(i) C(k-i)
  for (unsigned long k = 0; k <= 20; ++k) {
    Integer sum = 0;
    for (unsigned long i = 0; i <= k; ++i) sum += catalan(i) * catalan(k - i);
    EXPECT_EQ(catalan(k + 1), sum) << k;
  }
  for (unsigned long l = 1; l <= 40; ++l) EXPECT_LT(catalan(l - 1), integer_pow(Integer(4), l));
}

TEST(StringBound, Values) {
  auto one = expression_string_bound(1);
  EXPECT_EQ(one.fine, Integer(2));
  EXPECT_EQ(one.coarse, Integer(28));
  auto three = expression_string_bound(3);
  EXPECT_EQ(three.fine, Integer(196));
  EXPECT_EQ(three.coarse, Integer(21952));
  EXPECT_LT(expression_string_bound(10).fine, expression_string_bound(10).coarse);
  for (unsigned long l = 1; l <= 64; ++l) EXPECT_LE(expression_string_bound(l).fine, expression_string_bound(l).coarse);
  EXPECT_THROW(expression_string_bound(0), Error);
}

TEST(DensityVerdict, Conclusions) {
  const std::vector<Integer> bin = {0, 2, 1, 3, 7};
  auto v = density_verdict(bin, 2);
  EXPECT_EQ(v.value_at_base, Integer(-1));
  EXPECT_EQ(v.conclusion, DensityConclusion::criterion_met);
  EXPECT_GT(v.largest_root.lo, Rational(2));

  const std::vector<Integer> weak = {1, 1};  // x^2 - x - 1, golden ratio < 2
  auto w = density_verdict(weak, 2);
  EXPECT_EQ(w.value_at_base, Integer(1));
  EXPECT_EQ(w.conclusion, DensityConclusion::not_established);
  EXPECT_LE(w.largest_root.hi, Rational(2));

  const std::vector<Integer> exact = {0, 4};  // root exactly 2: not above the base
  auto e = density_verdict(exact, 2);
  EXPECT_EQ(e.value_at_base, Integer(0));
  EXPECT_EQ(e.conclusion, DensityConclusion::not_established);
  EXPECT_STREQ(to_string(DensityConclusion::criterion_met), "density-one-criterion-met");
}
