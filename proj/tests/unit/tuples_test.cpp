#include "ordspan/error.hpp"
#include "ordspan/tuples.hpp"

#include <gtest/gtest.h>

using namespace ordspan;

namespace {

ValueTuple t(std::initializer_list<long> v) { return ValueTuple(v.begin(), v.end()); }

std::set<ValueTuple> keys(const TupleMap& m) {
  std::set<ValueTuple> out;
  for (const auto& [k, _] : m) out.insert(k);
  return out;
}

}  // namespace

TEST(TupleSpan, BinaryPairAndFour) {
  auto two = tuple_span(DigitString::repeated(1, 2, 2), {});
  EXPECT_EQ(keys(two.tuples), (std::set<ValueTuple>{t({2}), t({3})}));

  auto four = tuple_span(DigitString::repeated(1, 2, 4), {});
  std::set<ValueTuple> expected = {t({2}), t({3}), t({5}), t({6}), t({7}), t({15})};
  for (long a : {2, 3}) {
    for (long b : {2, 3}) expected.insert(t({a, b}));
  }
  EXPECT_EQ(keys(four.tuples), expected);
  EXPECT_EQ(four.tuples.at(t({2, 3})), (std::vector<std::size_t>{2, 2}));
}

TEST(TupleSpan, TernaryTriple) {
  auto s = tuple_span(DigitString::repeated(2, 3, 3), {});
  ASSERT_TRUE(s.tuples.count(t({2, 2, 2})));
  EXPECT_EQ(s.tuples.at(t({2, 2, 2})), (std::vector<std::size_t>{1, 1, 1}));
}

TEST(TupleSpan, SinglesMatchSpan) {
  const auto src = DigitString::parse("2345", 10);
  auto ts = tuple_span(src, {});
  auto rf = ordered_span(src, {}).radical_free_integers(RadicalFreeVariant::not_perfect_power);
  std::vector<Integer> singles;
  for (const auto& [k, _] : ts.tuples) {
    if (k.size() == 1) singles.push_back(k[0]);
  }
  std::sort(singles.begin(), singles.end());
  EXPECT_EQ(singles, rf);
}

TEST(PrefixCode, Examples) {
  EXPECT_EQ(max_prefix_code_size(std::vector<ValueTuple>{t({2}), t({2, 3})}).max_prefix_code_size, 1u);
  EXPECT_EQ(max_prefix_code_size(std::vector<ValueTuple>{}).max_prefix_code_size, 0u);
  EXPECT_TRUE(is_proper_prefix(t({2}), t({2, 3})));
  EXPECT_FALSE(is_proper_prefix(t({2}), t({2})));
  EXPECT_FALSE(is_proper_prefix(t({3}), t({2, 3})));
  EXPECT_TRUE(is_prefix_code({t({2, 2}), t({2, 3}), t({3})}));
  EXPECT_FALSE(is_prefix_code({t({2}), t({2, 3})}));

  RepeatedDigitAnalysis a(1, 2, 6, {});
  EXPECT_EQ(max_prefix_code_size(a.tuples(4)).max_prefix_code_size, 8u);
  EXPECT_EQ(max_prefix_code_size(a.tuples(5)).max_prefix_code_size, 18u);
  auto six = max_prefix_code_size(a.tuples(6));
  EXPECT_EQ(six.max_prefix_code_size, 55u);
  EXPECT_EQ(six.leaves_by_length[1], 30u);
  EXPECT_EQ(six.leaves_by_length[2], 17u);
  EXPECT_EQ(six.leaves_by_length[3], 8u);
  EXPECT_TRUE(is_prefix_code(six.leaves));
}

TEST(NewTuples, Binary) {
  RepeatedDigitAnalysis a(1, 2, 5, {});
  EXPECT_TRUE(a.new_tuples(1).empty());
  EXPECT_EQ(a.new_tuples(2), (std::vector<ValueTuple>{t({2}), t({3})}));
  auto m4 = a.new_tuples(4);
  std::set<ValueTuple> got(m4.begin(), m4.end());
  std::set<ValueTuple> expected = {t({5}), t({6}), t({15})};
  for (long x : {2, 3}) {
    for (long y : {2, 3}) expected.insert(t({x, y}));
  }
  EXPECT_EQ(got, expected);
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_GE(max_prefix_code_size(a.tuples(n)).max_prefix_code_size, a.new_tuples(n).size());
    // Binary spans only grow (x*1 pads), so both differences agree.
    EXPECT_EQ(a.new_tuples(n, Difference::previous), a.new_tuples(n, Difference::all_smaller));
  }
  EXPECT_THROW(a.new_tuples(0), Error);
  EXPECT_THROW(a.new_tuples(6), Error);
}

TEST(Recurrence, Binary) {
  const std::vector<Integer> c = {0, 2, 1, 3, 7};
  RepeatedDigitAnalysis a(1, 2, 7, {});
  auto six = a.check_recurrence(6, c);
  // 2|M(4)| + |M(3)| + 3|M(2)| + 7|M(1)| = 2*7 + 1 + 3*2 + 0, since M(3) = {(7)}.
  EXPECT_EQ(a.new_tuples(3).size(), 1u);
  EXPECT_EQ(six.rhs, Integer(21));
  EXPECT_EQ(six.lhs, Integer(44));
  EXPECT_TRUE(six.satisfied);
  EXPECT_TRUE(a.check_recurrence(7, c).satisfied);
  const std::vector<Integer> zeros = {0, 0, 0};
  auto z = a.check_recurrence(4, zeros);
  EXPECT_EQ(z.rhs, Integer(0));
  EXPECT_TRUE(z.satisfied);
  EXPECT_THROW(a.check_recurrence(5, c), Error);
  EXPECT_TRUE(check_recurrence(1, 2, 6, c, {}).satisfied);
}
