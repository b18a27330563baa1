#pragma once

#include "ordspan/span.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ordspan {

/// Ordered positive integers, one per contiguous block of the source digits.
using ValueTuple = std::vector<Integer>;

/// Tuple -> block lengths of the lexicographically smallest partition realizing it.
using TupleMap = std::map<ValueTuple, std::vector<std::size_t>>;

struct TupleSpanSet {
  DigitString source;
  TupleMap tuples;
  bool cap_hit = false;
};

/// Every tuple obtained by cutting `s` into contiguous blocks, each block
/// contributing one radical-free positive integer from its ordered span.
TupleSpanSet tuple_span(const DigitString& s, const EvalCaps& caps, const SpanOptions& options = {},
                        RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power);

struct PrefixCodeReport {
  std::size_t total_tuples = 0;
  std::size_t max_prefix_code_size = 0;
  std::vector<ValueTuple> leaves;
  std::map<std::size_t, std::size_t> leaves_by_length;
};

/// N' as the number of extension-maximal tuples. In prefix order the
/// ancestors of a tuple form a chain, so sending each member of an antichain
/// to a maximal extension is injective; the maximal tuples are themselves an
/// antichain, hence a largest prefix code.
PrefixCodeReport max_prefix_code_size(const std::vector<ValueTuple>& tuples);
PrefixCodeReport max_prefix_code_size(const TupleMap& tuples);

bool is_proper_prefix(const ValueTuple& a, const ValueTuple& b);
/// No member is a proper prefix of another.
bool is_prefix_code(const std::vector<ValueTuple>& tuples);

enum class Difference {
  previous,          // T(n) \ T(n-1)
  all_smaller,       // T(n) \ union of T(m), m < n
};

struct RecurrenceCheck {
  Integer lhs;
  Integer rhs;
  bool satisfied = false;
};

/// Spans, tuple spans and their differences for the strings [digit]^n,
/// n = 1..max_n, computed from one lattice.
class RepeatedDigitAnalysis {
 public:
  RepeatedDigitAnalysis(int digit, int base, std::size_t max_n, const EvalCaps& caps,
                        RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power,
                        const SpanOptions& options = {});

  int digit() const noexcept { return digit_; }
  int base() const noexcept { return base_; }
  std::size_t max_n() const noexcept { return tuples_.size(); }
  RadicalFreeVariant variant() const noexcept { return variant_; }
  const SpanLattice& lattice() const noexcept { return lattice_; }

  SpanSet span(std::size_t n) const;
  const TupleMap& tuples(std::size_t n) const;
  bool cap_hit(std::size_t n) const;

  /// Radical-free integers of span([d]^n) not in any shorter span.
  std::vector<Integer> new_radical_free(std::size_t n) const { return new_radical_free(n, variant_); }
  /// Same count under another filter; tuples are unaffected.
  std::vector<Integer> new_radical_free(std::size_t n, RadicalFreeVariant variant) const;
  /// M(n); M(1) is measured against the empty set.
  std::vector<ValueTuple> new_tuples(std::size_t n, Difference kind = Difference::previous) const;
  /// |M(n)| >= sum_i c_i |M(n-i)|, coefficients indexed from offset 1.
  RecurrenceCheck check_recurrence(std::size_t n, std::span<const Integer> coefficients) const;

 private:
  void check_n(std::size_t n) const;

  int digit_;
  int base_;
  RadicalFreeVariant variant_;
  SpanLattice lattice_;
  std::vector<TupleMap> tuples_;  // tuples_[n-1] = T([d]^n)
};

std::vector<ValueTuple> new_tuples(int digit, int base, std::size_t n, const EvalCaps& caps,
                                   RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power,
                                   const SpanOptions& options = {}, Difference kind = Difference::previous);

RecurrenceCheck check_recurrence(int digit, int base, std::size_t n, std::span<const Integer> coefficients,
                                 const EvalCaps& caps,
                                 RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power,
                                 const SpanOptions& options = {});

}  // namespace ordspan
