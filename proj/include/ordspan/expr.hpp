#pragma once

#include "ordspan/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordspan {

enum class NodeKind : std::uint8_t { atom, negate, binary };

/// Immutable expression tree over a digit string. Atoms are contiguous digit
/// runs read as base-b numerals; `begin` is the index of their first digit in
/// the source string.
class Expr {
 public:
  static Expr atom(std::size_t begin, std::vector<std::uint8_t> digits);
  static Expr negate(Expr child);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  NodeKind kind() const noexcept;
  BinaryOp op() const;
  const Expr& child() const;
  const Expr& lhs() const;
  const Expr& rhs() const;
  std::size_t atom_begin() const;
  std::span<const std::uint8_t> atom_digits() const;

  /// Negations plus binary operations.
  std::size_t operation_count() const;
  /// Atoms have depth 0.
  std::size_t depth() const;
  /// Digits of all atoms, left to right.
  std::vector<std::uint8_t> leaf_digits() const;
  bool has_binary_operation() const;
  /// Atoms cover [0, n) contiguously and in order.
  bool preserves_digit_order() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Per-kind operation tally of a witness.
struct OperationCounts {
  std::size_t negate = 0;
  std::size_t add = 0;
  std::size_t sub = 0;
  std::size_t mul = 0;
  std::size_t div = 0;
  std::size_t pow = 0;
  std::size_t pow_neg = 0;

  std::size_t binary_total() const { return add + sub + mul + div + pow + pow_neg; }
  friend bool operator==(const OperationCounts&, const OperationCounts&) = default;
};

OperationCounts count_operations(const Expr& e);

// Precedence class of a node, which is all the printer needs to know about a
// subexpression besides its text.
enum class Shape : std::uint8_t { atom, negate, additive, multiplicative, power };

Shape shape_of(const Expr& e);
Shape shape_of(BinaryOp op) noexcept;

/// Text of -(child), given the child's standalone text.
std::string render_negate(Shape child, std::string_view child_text);
/// Text of lhs op rhs, given both operands' standalone texts.
std::string render_binary(BinaryOp op, Shape lhs, std::string_view lhs_text, Shape rhs, std::string_view rhs_text);

/// Minimal-parentheses rendering; parse_witness(format_witness(e)) == e.
std::string format_witness(const Expr& e);

/// Grammar:
///   expression := ['-'] term {('+'|'-') term}
///   term       := power {('*'|'/') power}
///   power      := primary ['^' ['-'] power]
///   primary    := atom | '(' expression ')' | '-' '(' expression ')'
///   atom       := digit+   (0-9 then a-z)
/// A leading '-' of an expression negates its first term. '^-' is pow_neg.
/// Throws SyntaxError on malformed text or a digit not valid in `base`.
Expr parse_witness(std::string_view text, int base);

/// Throws Error(witness_invalid) when any step is undefined or exceeds caps.
ExactValue eval_witness(const Expr& e, int base, const EvalCaps& caps);

}  // namespace ordspan
