#include "ordspan/tuples.hpp"

#include "ordspan/error.hpp"

#include <algorithm>

namespace ordspan {

namespace {

// T(prefix j) for every j, by extending shorter prefixes with one more block.
std::vector<TupleMap> prefix_tuple_spans(const SpanLattice& lattice, RadicalFreeVariant variant) {
  const std::size_t n = lattice.source().length();
  std::vector<std::vector<std::vector<Integer>>> block(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    block[i].resize(n + 1);
    for (std::size_t j = i + 1; j <= n; ++j) block[i][j] = lattice.span(i, j).radical_free_integers(variant);
  }

  std::vector<TupleMap> prefix(n + 1);
  prefix[0].emplace(ValueTuple{}, std::vector<std::size_t>{});
  for (std::size_t j = 1; j <= n; ++j) {
    TupleMap& out = prefix[j];
    for (std::size_t i = 0; i < j; ++i) {
      const auto& values = block[i][j];
      if (values.empty()) continue;
      for (const auto& [head, blocks] : prefix[i]) {
        for (const auto& v : values) {
          ValueTuple t = head;
          t.push_back(v);
          std::vector<std::size_t> b = blocks;
          b.push_back(j - i);
          auto [it, inserted] = out.try_emplace(std::move(t), b);
          if (!inserted && b < it->second) it->second = std::move(b);
        }
      }
    }
  }
  prefix.erase(prefix.begin());
  return prefix;
}

}  // namespace

TupleSpanSet tuple_span(const DigitString& s, const EvalCaps& caps, const SpanOptions& options,
                        RadicalFreeVariant variant) {
  SpanOptions opts = options;
  opts.include_full_atom = true;
  SpanLattice lattice(s, caps, opts);
  auto prefixes = prefix_tuple_spans(lattice, variant);
  return TupleSpanSet{s, std::move(prefixes.back()), lattice.full().cap_hit()};
}

bool is_proper_prefix(const ValueTuple& a, const ValueTuple& b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

PrefixCodeReport max_prefix_code_size(const std::vector<ValueTuple>& tuples) {
  std::vector<ValueTuple> sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // In lexicographic order the extensions of t immediately follow t.
  PrefixCodeReport report;
  report.total_tuples = sorted.size();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const bool extended = i + 1 < sorted.size() && is_proper_prefix(sorted[i], sorted[i + 1]);
    if (extended) continue;
    ++report.leaves_by_length[sorted[i].size()];
    report.leaves.push_back(sorted[i]);
  }
  report.max_prefix_code_size = report.leaves.size();
  return report;
}

PrefixCodeReport max_prefix_code_size(const TupleMap& tuples) {
  std::vector<ValueTuple> keys;
  keys.reserve(tuples.size());
  for (const auto& [t, _] : tuples) keys.push_back(t);
  return max_prefix_code_size(keys);
}

bool is_prefix_code(const std::vector<ValueTuple>& tuples) {
  std::vector<ValueTuple> sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (is_proper_prefix(sorted[i], sorted[i + 1])) return false;
  }
  return true;
}

RepeatedDigitAnalysis::RepeatedDigitAnalysis(int digit, int base, std::size_t max_n, const EvalCaps& caps,
                                             RadicalFreeVariant variant, const SpanOptions& options)
    : digit_(digit),
      base_(base),
      variant_(variant),
      lattice_(DigitString::repeated(digit, base, max_n), caps,
               [&] {
                 SpanOptions o = options;
                 o.include_full_atom = true;
                 return o;
               }()),
      tuples_(prefix_tuple_spans(lattice_, variant)) {}

void RepeatedDigitAnalysis::check_n(std::size_t n) const {
  if (n < 1 || n > tuples_.size()) {
    throw Error(ErrorCode::invalid_argument,
                "n = " + std::to_string(n) + " outside [1, " + std::to_string(tuples_.size()) + "]");
  }
}

SpanSet RepeatedDigitAnalysis::span(std::size_t n) const {
  check_n(n);
  return lattice_.span(0, n);
}

const TupleMap& RepeatedDigitAnalysis::tuples(std::size_t n) const {
  check_n(n);
  return tuples_[n - 1];
}

bool RepeatedDigitAnalysis::cap_hit(std::size_t n) const { return span(n).cap_hit(); }

std::vector<Integer> RepeatedDigitAnalysis::new_radical_free(std::size_t n, RadicalFreeVariant variant) const {
  check_n(n);
  std::vector<Integer> seen;
  for (std::size_t m = 1; m < n; ++m) {
    auto rf = lattice_.span(0, m).radical_free_integers(variant);
    seen.insert(seen.end(), rf.begin(), rf.end());
  }
  std::sort(seen.begin(), seen.end());
  std::vector<Integer> result;
  for (auto& t : lattice_.span(0, n).radical_free_integers(variant)) {
    if (!std::binary_search(seen.begin(), seen.end(), t)) result.push_back(t);
  }
  return result;
}

std::vector<ValueTuple> RepeatedDigitAnalysis::new_tuples(std::size_t n, Difference kind) const {
  check_n(n);
  std::vector<ValueTuple> out;
  for (const auto& [t, _] : tuples_[n - 1]) {
    bool old = false;
    if (kind == Difference::previous) {
      old = n > 1 && tuples_[n - 2].count(t) > 0;
    } else {
      for (std::size_t m = 1; m < n && !old; ++m) old = tuples_[m - 1].count(t) > 0;
    }
    if (!old) out.push_back(t);
  }
  return out;
}

RecurrenceCheck RepeatedDigitAnalysis::check_recurrence(std::size_t n, std::span<const Integer> coefficients) const {
  check_n(n);
  if (coefficients.size() >= n) {
    throw Error(ErrorCode::invalid_argument, "recurrence needs n > " + std::to_string(coefficients.size()));
  }
  RecurrenceCheck check;
  check.lhs = static_cast<unsigned long>(new_tuples(n).size());
  check.rhs = 0;
  for (std::size_t i = 1; i <= coefficients.size(); ++i) {
    if (sgn(coefficients[i - 1]) < 0) throw Error(ErrorCode::invalid_argument, "coefficients must be nonnegative");
    if (sgn(coefficients[i - 1]) == 0) continue;
    check.rhs += coefficients[i - 1] * static_cast<unsigned long>(new_tuples(n - i).size());
  }
  check.satisfied = check.lhs >= check.rhs;
  return check;
}

std::vector<ValueTuple> new_tuples(int digit, int base, std::size_t n, const EvalCaps& caps,
                                   RadicalFreeVariant variant, const SpanOptions& options, Difference kind) {
  return RepeatedDigitAnalysis(digit, base, n, caps, variant, options).new_tuples(n, kind);
}

RecurrenceCheck check_recurrence(int digit, int base, std::size_t n, std::span<const Integer> coefficients,
                                 const EvalCaps& caps, RadicalFreeVariant variant, const SpanOptions& options) {
  return RepeatedDigitAnalysis(digit, base, n, caps, variant, options).check_recurrence(n, coefficients);
}

}  // namespace ordspan
