#pragma once

#include "ordspan/digits.hpp"
#include "ordspan/expr.hpp"
#include "ordspan/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ordspan {

struct SpanOptions {
  std::size_t max_length = 12;
  bool allow_leading_zero = false;
  // false drops the bare whole-string numeral (pure concatenation) from the
  // top-level set; substrings keep their atoms.
  bool include_full_atom = true;
  unsigned jobs = 1;
  std::size_t max_entries = 4'000'000;

  void validate() const;
};

namespace detail {

struct Derivation {
  NodeKind kind = NodeKind::atom;
  BinaryOp op = BinaryOp::add;
  std::uint16_t split = 0;  // digits in the left operand
  std::uint32_t lhs = 0;    // entry index (negate: same table; binary: left table)
  std::uint32_t rhs = 0;
};

struct SpanEntry {
  ExactValue value;
  Derivation how;
  std::uint16_t ops = 0;
  std::uint16_t depth = 0;
  Shape shape = Shape::atom;
  std::string text;
};

struct SpanTable {
  std::vector<std::uint8_t> digits;
  std::vector<SpanEntry> entries;      // CanonicalOrder
  std::vector<const SpanTable*> left;  // left[k-1]: table of digits[0, k)
  std::vector<const SpanTable*> right; // right[k-1]: table of digits[k, n)
  bool cap_hit = false;

  std::optional<std::size_t> find(const ExactValue& v) const;
};

struct SpanStore;

}  // namespace detail

/// The value set of one digit string with one witness per value.
class SpanSet {
 public:
  const DigitString& source() const noexcept { return source_; }
  std::size_t size() const noexcept;
  bool cap_hit() const noexcept;

  const ExactValue& value(std::size_t index) const;
  /// Values in canonical order (numerator, then denominator).
  std::vector<ExactValue> values() const;
  std::optional<std::size_t> find(const ExactValue& v) const;
  bool contains(const ExactValue& v) const { return find(v).has_value(); }

  /// Witness tree; atom indices are relative to source().
  Expr witness(std::size_t index) const;
  const std::string& witness_text(std::size_t index) const;
  std::size_t witness_operations(std::size_t index) const;

  /// Positive integers passing the radical filter, ascending.
  std::vector<Integer> radical_free_integers(RadicalFreeVariant variant) const;

 private:
  friend class SpanLattice;
  SpanSet(std::shared_ptr<const detail::SpanStore> store, const detail::SpanTable* table, DigitString source)
      : store_(std::move(store)), table_(table), source_(std::move(source)) {}

  std::shared_ptr<const detail::SpanStore> store_;
  const detail::SpanTable* table_;
  DigitString source_;
};

/// Interval dynamic program over every substring of one digit string.
/// Substrings with equal digits share a table.
class SpanLattice {
 public:
  SpanLattice(DigitString source, EvalCaps caps, SpanOptions options = {});

  const DigitString& source() const noexcept { return source_; }
  const EvalCaps& caps() const noexcept { return caps_; }
  const SpanOptions& options() const noexcept { return options_; }

  /// Span of digits [begin, end). Always includes the substring's own atom.
  SpanSet span(std::size_t begin, std::size_t end) const;
  /// Span of the whole string, honoring include_full_atom.
  SpanSet full() const;

 private:
  DigitString source_;
  EvalCaps caps_;
  SpanOptions options_;
  std::shared_ptr<detail::SpanStore> store_;
};

/// Positional value of a digit run, or excluded when the leading-zero policy forbids it.
Outcome atom_value(const DigitString& run, bool allow_leading_zero = false);

SpanSet ordered_span(const DigitString& s, const EvalCaps& caps, const SpanOptions& options = {});

/// Radical-free integers of span([digit]^n) absent from every span([digit]^m), m < n.
std::vector<Integer> new_radical_free(int digit, int base, std::size_t n, const EvalCaps& caps,
                                      RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power,
                                      const SpanOptions& options = {});

struct CardinalityCheck {
  std::size_t span_size = 0;
  // Trees over L digits with every node optionally negated; no span can be larger.
  Integer tree_count;
  Integer bound;  // base^L(s)
  bool lower_bound_only = false;  // caps dropped candidates, so span_size may undercount
  // span_size < bound, or tree_count < bound when span_size is only a lower bound.
  bool satisfied = false;
};

/// Number of expression trees over l digits (every split into atoms, every
/// bracketing, six operations, optional negation on each node).
Integer expression_tree_count(std::size_t l);

CardinalityCheck span_cardinality_check(const DigitString& s, const EvalCaps& caps, const SpanOptions& options = {});

}  // namespace ordspan
