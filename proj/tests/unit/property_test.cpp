// Engine-vs-oracle and structural properties.
#include "ordspan/friedman.hpp"
#include "ordspan/span.hpp"
#include "ordspan/tuples.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ordspan;

namespace {

std::set<std::string> engine_values(const std::vector<int>& digits, int base, const EvalCaps& caps) {
  std::vector<std::uint8_t> d(digits.begin(), digits.end());
  std::set<std::string> out;
  for (const auto& v : ordered_span(DigitString(base, d), caps).values()) out.insert(v.to_string());
  return out;
}

// Calls f on every digit string of length 1..max_len.
template <typename F>
void for_each_string(int base, int max_len, F&& f) {
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> d(len, 0);
    for (;;) {
      f(d);
      int k = len;
      while (k > 0 && ++d[k - 1] == base) d[--k] = 0;
      if (k == 0) break;
    }
  }
}

}  // namespace

TEST(Property, RadicalFreeMatchesPowerTable) {
  constexpr std::uint64_t kLimit = 1'000'000;
  const auto powers = oracle::perfect_power_table(kLimit);
  for (std::uint64_t t = 2; t <= kLimit; ++t) {
    ASSERT_EQ(radical_free(Integer(static_cast<unsigned long>(t))), !powers[t]) << t;
  }
}

TEST(Property, SpanMatchesNaiveOracleSmallBases) {
  for (int base : {2, 3}) {
    for_each_string(base, 4, [&](const std::vector<int>& d) {
      ASSERT_EQ(engine_values(d, base, {}), oracle::naive_span(d, base)) << "base " << base;
    });
  }
}

TEST(Property, SpanMatchesNaiveOracleDecimal) {
  std::size_t checked = 0;
  for_each_string(10, 4, [&](const std::vector<int>& d) {
    ASSERT_EQ(engine_values(d, 10, {}), oracle::naive_span(d, 10));
    ++checked;
  });
  EXPECT_EQ(checked, 11110u);
}

TEST(Property, SpanMatchesNaiveOracleTightCaps) {
  EvalCaps caps;
  caps.max_value_bits = 12;
  caps.max_exponent_magnitude = 5;
  oracle::Caps ocaps{12, 5};
  for_each_string(10, 3, [&](const std::vector<int>& d) {
    ASSERT_EQ(engine_values(d, 10, caps), oracle::naive_span(d, 10, ocaps));
  });
}

TEST(Property, WitnessesRoundTripAndEvaluate) {
  for (const char* text : {"1111111", "2222", "127", "9090", "3333"}) {
    const int base = std::string(text) == "1111111" ? 2 : 10;
    auto s = ordered_span(DigitString::parse(text, base), {});
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string& w = s.witness_text(i);
      Expr e = parse_witness(w, base);
      ASSERT_EQ(format_witness(e), w);
      ASSERT_EQ(e, s.witness(i));
      ASSERT_EQ(eval_witness(e, base, {}), s.value(i)) << w;
    }
  }
  // Every nice hit in a scan re-verifies from its printed witness alone.
  for (int base : {2, 3, 10}) {
    auto report = scan_density(base, 400, {});
    for (const auto& m : report.members) {
      ASSERT_FALSE(check_witness(m.target, base, m.witness, {})) << m.witness;
      auto again = is_nice_friedman(m.target, base, {});
      ASSERT_TRUE(again.is_nice_friedman);
      ASSERT_EQ(*again.witness, m.witness);
    }
  }
}

TEST(Property, NegationSymmetry) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const int base = std::uniform_int_distribution<int>(2, 16)(rng);
    const int len = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<std::uint8_t> d(len);
    for (auto& x : d) x = static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, base - 1)(rng));
    auto s = ordered_span(DigitString(base, d), {});
    for (const auto& v : s.values()) ASSERT_TRUE(s.contains(-v));
  }
}

TEST(Property, LeavesAreMaximumAntichain) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    const int size = std::uniform_int_distribution<int>(0, 12)(rng);
    std::set<std::vector<long>> set;
    while (static_cast<int>(set.size()) < size) {
      const int len = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<long> t(len);
      for (auto& x : t) x = std::uniform_int_distribution<long>(2, 3)(rng);
      set.insert(t);
    }
    std::vector<std::vector<long>> tuples(set.begin(), set.end());
    std::vector<ValueTuple> values;
    for (const auto& t : tuples) values.emplace_back(t.begin(), t.end());
    auto report = max_prefix_code_size(values);
    ASSERT_TRUE(is_prefix_code(report.leaves));
    ASSERT_EQ(report.max_prefix_code_size, oracle::brute_max_antichain(tuples));
  }
  // The actual small tuple sets too.
  RepeatedDigitAnalysis a(1, 2, 4, {});
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::vector<long>> tuples;
    for (const auto& [t, _] : a.tuples(n)) {
      std::vector<long> v;
      for (const auto& x : t) v.push_back(x.get_si());
      tuples.push_back(v);
    }
    ASSERT_LE(tuples.size(), 12u);
    ASSERT_EQ(max_prefix_code_size(a.tuples(n)).max_prefix_code_size, oracle::brute_max_antichain(tuples));
  }
}

TEST(Property, BinaryGrowthIsMonotone) {
  RepeatedDigitAnalysis a(1, 2, 7, {});
  for (std::size_t n = 2; n <= 7; ++n) {
    auto prev = a.span(n - 1).values();
    auto cur = a.span(n);
    for (const auto& v : prev) ASSERT_TRUE(cur.contains(v)) << n;  // x -> x*1
    for (const auto& [t, _] : a.tuples(n - 1)) ASSERT_TRUE(a.tuples(n).count(t));
  }
}
