#include "ordspan/error.hpp"
#include "ordspan/friedman.hpp"

#include <gtest/gtest.h>

using namespace ordspan;

TEST(NiceFriedman, Examples) {
  auto r = is_nice_friedman(Integer(127), 10, {});
  EXPECT_TRUE(r.is_nice_friedman);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, "-1+2^7");
  EXPECT_EQ(r.ops_used.negate, 1u);
  EXPECT_EQ(r.ops_used.pow, 1u);

  auto c = is_nice_friedman(Integer(343), 10, {});
  EXPECT_TRUE(c.is_nice_friedman);
  EXPECT_EQ(*c.witness, "(3+4)^3");

  for (long n : {25, 10, 100, 1000, 10000}) {
    auto f = is_nice_friedman(Integer(n), 10, {});
    EXPECT_FALSE(f.is_nice_friedman) << n;
    EXPECT_FALSE(f.witness) << n;
  }
}

TEST(NiceFriedman, PureConcatenationRejected) {
  auto two = is_nice_friedman(Integer(2), 2, {});
  EXPECT_FALSE(two.is_nice_friedman);
  auto three = is_nice_friedman(Integer(3), 2, {});
  EXPECT_FALSE(three.is_nice_friedman);  // "11": 1+1 = 2, 1*1 = 1, ...
  EXPECT_FALSE(is_nice_friedman(Integer(7), 10, {}).is_nice_friedman);
}

TEST(NiceFriedman, Permutation) {
  FriedmanOptions opts;
  opts.allow_permutation = true;
  auto r = is_nice_friedman(Integer(25), 10, {}, opts);
  EXPECT_FALSE(r.is_nice_friedman);
  EXPECT_TRUE(r.is_friedman);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, "5^2");
  EXPECT_EQ(r.witness_digits, "52");
  EXPECT_EQ(eval_witness(parse_witness(*r.witness, 10), 10, {}), ExactValue(25));
}

TEST(ScanDensity, Decimal) {
  auto d200 = scan_density(10, 200, {});
  EXPECT_EQ(d200.found, 1u);
  ASSERT_EQ(d200.members.size(), 1u);
  EXPECT_EQ(d200.members[0].target, Integer(127));
  EXPECT_EQ(d200.ratio(), "1/200");
  EXPECT_EQ(scan_density(10, 100, {}).found, 0u);
  EXPECT_EQ(scan_density(2, 3, {}).found, 0u);

  FriedmanOptions opts;
  opts.scan_ceiling = 50;
  try {
    scan_density(10, 51, {}, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::resource);
  }
  EXPECT_THROW(scan_density(10, 0, {}), Error);
}

TEST(ScanDensity, ThreadIndependent) {
  FriedmanOptions one, many;
  many.span.jobs = 4;
  auto a = scan_density(3, 300, {}, one);
  auto b = scan_density(3, 300, {}, many);
  ASSERT_EQ(a.members.size(), b.members.size());
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    EXPECT_EQ(a.members[i].target, b.members[i].target);
    EXPECT_EQ(a.members[i].witness, b.members[i].witness);
  }
}

TEST(CheckWitness, Reasons) {
  EXPECT_FALSE(check_witness(Integer(127), 10, "-1+2^7", {}));
  EXPECT_TRUE(check_witness(Integer(127), 10, "127", {}));
  EXPECT_TRUE(check_witness(Integer(127), 10, "-(127)", {}));
  EXPECT_TRUE(check_witness(Integer(127), 10, "2^7-1", {}));
  EXPECT_TRUE(check_witness(Integer(127), 10, "1+2^7", {}));
  EXPECT_TRUE(check_witness(Integer(128), 10, "1+2*8", {}));
  EXPECT_TRUE(check_witness(Integer(105), 10, "1*05", {}));
  EXPECT_THROW(check_witness(Integer(127), 10, "2^^7", {}), SyntaxError);
}
