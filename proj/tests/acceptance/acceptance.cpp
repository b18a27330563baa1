// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include "ordspan/friedman.hpp"
#include "ordspan/growth.hpp"
#include "ordspan/published.hpp"
#include "ordspan/runs.hpp"
#include "ordspan/tuples.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ordspan;

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

template <typename T>
std::vector<Integer> ints(std::span<const T> v) {
  return std::vector<Integer>(v.begin(), v.end());
}
std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::string list(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

void binary_rows(Check& c) {
  RepeatedDigitAnalysis a(1, 2, 5, {});
  std::vector<Integer> counts, nps;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto& row = published::kBinaryRows[n - 1];
    const auto fresh = a.new_radical_free(n);
    const auto np = max_prefix_code_size(a.tuples(n)).max_prefix_code_size;
    c.require(fresh == ints(std::span<const long>(*row.new_radical_free)),
              "set n=" + std::to_string(n) + " is {" + list(fresh) + "}");
    c.require(static_cast<long>(np) == row.n_prime, "N' n=" + std::to_string(n) + " is " + std::to_string(np));
    counts.emplace_back(static_cast<unsigned long>(fresh.size()));
    nps.emplace_back(static_cast<unsigned long>(np));
  }
  c.detail << "counts " << list(counts) << "; N' " << list(nps);
}

void binary_rows_6_7(Check& c) {
  RepeatedDigitAnalysis a(1, 2, 7, {});
  for (std::size_t n = 6; n <= 7; ++n) {
    const auto& row = published::kBinaryRows[n - 1];
    const std::size_t count = a.new_radical_free(n).size();
    const std::size_t np = max_prefix_code_size(a.tuples(n)).max_prefix_code_size;
    c.detail << "n=" << n << ": count " << count << ", N' " << np << "; ";
    c.require(static_cast<long>(count) == row.count, "count n=" + std::to_string(n));
    c.require(static_cast<long>(np) == row.n_prime, "N' n=" + std::to_string(n));
  }
  auto six = max_prefix_code_size(a.tuples(6));
  c.detail << "N'(6) = " << six.leaves_by_length[1] << " singles + " << six.leaves_by_length[2] << " pairs + "
           << six.leaves_by_length[3] << " triples";
  c.require(six.leaves_by_length.size() == 3 && six.leaves_by_length[1] == 30 && six.leaves_by_length[2] == 17 &&
                six.leaves_by_length[3] == 8,
            "decomposition 30+17+8");
  c.require(is_prefix_code(six.leaves), "leaves form a prefix code");
}

void prefix_threshold(Check& c) {
  RepeatedDigitAnalysis a(1, 2, 7, {});
  const std::size_t np = max_prefix_code_size(a.tuples(7)).max_prefix_code_size;
  c.detail << "N'([1]^7) = " << np << " > 2^7 = 128";
  c.require(np > 128, "N' > 128");
}

void recurrence(Check& c) {
  const auto coeff = ints(std::span<const long>(published::kBinaryRecurrence));
  RepeatedDigitAnalysis a(1, 2, 8, {});
  for (std::size_t n = 6; n <= 8; ++n) {
    auto r = a.check_recurrence(n, coeff);
    c.detail << "n=" << n << ": |M| " << r.lhs.get_str() << " >= " << r.rhs.get_str() << "; ";
    c.require(r.satisfied, "n=" + std::to_string(n));
  }
}

void growth(Check& c) {
  auto bin = density_verdict(ints(std::span<const long>(published::kBinaryCounts)), 2);
  c.require(bin.value_at_base == -1, "P(2) = -1");
  c.require(bin.largest_root.lo > 2, "root enclosure above 2");
  c.detail << "P(2) = " << bin.value_at_base.get_str() << ", g in [" << bin.largest_root.lo.get_d() << ", "
           << bin.largest_root.hi.get_d() << "]";
  for (int base : {3, 4}) {
    auto counts = published::counts_for(base, base - 1);
    auto v = density_verdict(ints(std::span<const long>(*counts)), base);
    const long stated = *published::value_at_base_for(base);
    c.detail << "; P(" << base << ") = " << v.value_at_base.get_str() << " (stated " << stated << ")";
    c.require(sgn(v.value_at_base) < 0 && stated < 0, "negative sign at base " + std::to_string(base));
    c.require(v.conclusion == DensityConclusion::criterion_met, "verdict at base " + std::to_string(base));
  }
}

void recomputed_growth(Check& c) {
  for (int base : {3, 4}) {
    RunConfig cfg;
    cfg.base = base;
    const auto rc = recompute_counts(cfg, cfg.max_length);
    const auto pub = *published::counts_for(base, base - 1);
    const auto v = density_verdict(rc.counts, base);
    c.detail << "[" << base - 1 << "]^n base " << base << ": " << list(rc.counts) << " vs "
             << list(ints(std::span<const long>(pub))) << ", P(" << base << ") = " << v.value_at_base.get_str()
             << (rc.extended ? " (degree extended)" : "") << "; ";
    c.require(rc.counts.size() >= 6, "at least six counts");
    c.require(v.conclusion == DensityConclusion::criterion_met, "recomputed P(b) < 0 at base " + std::to_string(base));
  }
}

void cardinality_bounds(Check& c) {
  std::size_t strings = 0, largest = 0, capped = 0;
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::size_t> idx(len, 0);
    const int digits[] = {1, 7, 27};
    for (;;) {
      std::vector<std::uint8_t> d;
      for (auto i : idx) d.push_back(static_cast<std::uint8_t>(digits[i]));
      auto chk = span_cardinality_check(DigitString(28, d), {});
      c.require(chk.satisfied, "string " + DigitString(28, d).to_string());
      largest = std::max(largest, chk.span_size);
      capped += chk.lower_bound_only ? 1 : 0;
      ++strings;
      std::size_t k = len;
      while (k > 0 && ++idx[k - 1] == 3) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  for (unsigned long l = 1; l <= 32; ++l) {
    auto b = expression_string_bound(l);
    c.require(b.fine < b.coarse, "l=" + std::to_string(l));
  }
  c.detail << strings << " strings below 28^L (largest capped span " << largest << "; " << capped
           << " hit caps and are bounded by the tree count " << expression_tree_count(3).get_str()
           << " instead); fine < coarse for l=1..32";
}

void vignettes(Check& c) {
  auto r127 = is_nice_friedman(Integer(127), 10, {});
  c.require(r127.is_nice_friedman && r127.witness && !check_witness(Integer(127), 10, *r127.witness, {}),
            "127 nice with valid witness");
  FriedmanOptions perm;
  perm.allow_permutation = true;
  auto r25 = is_nice_friedman(Integer(25), 10, {}, perm);
  c.require(!r25.is_nice_friedman && r25.is_friedman, "25 Friedman but not nice");
  c.require(r25.witness && *r25.witness == "5^2", "25 witness 5^2");
  for (long n : {10, 100, 1000}) c.require(!is_nice_friedman(Integer(n), 10, {}).is_nice_friedman, std::to_string(n));
  auto scan = scan_density(10, 200, {});
  c.require(scan.members.size() == 1 && scan.members[0].target == 127, "scan to 200 is {127}");
  c.detail << "127 = " << r127.witness.value_or("?") << "; 25 = " << r25.witness.value_or("?")
           << " (permuted); 10, 100, 1000 not nice; scan(200) F = " << scan.found;
}

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

void properties(Check& c) {
  // (a) radical_free against a generated perfect-power table.
  const auto powers = oracle::perfect_power_table(1'000'000);
  std::size_t bad = 0;
  for (unsigned long t = 2; t <= 1'000'000; ++t) bad += radical_free(Integer(t)) == powers[t] ? 1 : 0;
  c.require(bad == 0, "(a) " + std::to_string(bad) + " disagreements");

  // (b) engine vs naive enumerator.
  std::size_t strings = 0, diffs = 0;
  for (int base : {2, 3, 10}) {
    for_each_string(base, 4, [&](const std::vector<int>& d) {
      std::set<std::string> engine;
      std::vector<std::uint8_t> u(d.begin(), d.end());
      for (const auto& v : ordered_span(DigitString(base, u), {}).values()) engine.insert(v.to_string());
      diffs += engine == oracle::naive_span(d, base) ? 0 : 1;
      ++strings;
    });
  }
  c.require(diffs == 0, "(b) " + std::to_string(diffs) + " strings differ");

  // (c) witnesses round-trip and evaluate.
  std::size_t witnesses = 0, broken = 0;
  for (const auto& [text, base] : std::vector<std::pair<const char*, int>>{{"1111111", 2}, {"2222", 3}, {"127", 10},
                                                                            {"3333", 4}, {"9090", 10}}) {
    auto s = ordered_span(DigitString::parse(text, base), {});
    for (std::size_t i = 0; i < s.size(); ++i) {
      Expr e = parse_witness(s.witness_text(i), base);
      broken += format_witness(e) == s.witness_text(i) && eval_witness(e, base, {}) == s.value(i) &&
                        e.preserves_digit_order()
                    ? 0
                    : 1;
      ++witnesses;
    }
  }
  c.require(broken == 0, "(c) " + std::to_string(broken) + " witnesses");

  // (d) negation symmetry.
  std::size_t asym = 0;
  for_each_string(3, 5, [&](const std::vector<int>& d) {
    std::vector<std::uint8_t> u(d.begin(), d.end());
    auto s = ordered_span(DigitString(3, u), {});
    for (const auto& v : s.values()) asym += s.contains(-v) ? 0 : 1;
  });
  c.require(asym == 0, "(d) " + std::to_string(asym) + " values without negation");

  // (e) leaf count equals the largest antichain.
  std::mt19937 rng(2024);
  std::size_t sets = 0, wrong = 0;
  for (; sets < 500; ++sets) {
    const int size = std::uniform_int_distribution<int>(0, 12)(rng);
    std::set<std::vector<long>> set;
    while (static_cast<int>(set.size()) < size) {
      std::vector<long> t(std::uniform_int_distribution<int>(1, 3)(rng));
      for (auto& x : t) x = std::uniform_int_distribution<long>(2, 3)(rng);
      set.insert(t);
    }
    std::vector<std::vector<long>> tuples(set.begin(), set.end());
    std::vector<ValueTuple> values;
    for (const auto& t : tuples) values.emplace_back(t.begin(), t.end());
    wrong += max_prefix_code_size(values).max_prefix_code_size == oracle::brute_max_antichain(tuples) ? 0 : 1;
  }
  c.require(wrong == 0, "(e) " + std::to_string(wrong) + " sets");

  c.detail << "(a) [2,10^6] ok; (b) " << strings << " strings; (c) " << witnesses << " witnesses; (d) base-3 length<=5; (e) "
           << sets << " random sets";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"binary rows n=1..5", binary_rows},
      {"binary rows n=6,7 and N'(6) decomposition", binary_rows_6_7},
      {"prefix code exceeds 2^7", prefix_threshold},
      {"recurrence for n=6,7,8", recurrence},
      {"growth verdicts", growth},
      {"ternary/quaternary recomputation", recomputed_growth},
      {"span size bound and string-count bound", cardinality_bounds},
      {"verifier vignettes", vignettes},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail = c.detail.str();
    while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
    std::printf("%s %zu %s (%.2fs): %s\n", c.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs, detail.c_str());
    std::fflush(stdout);
    failed += c.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
