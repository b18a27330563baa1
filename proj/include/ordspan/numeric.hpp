#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace ordspan {

using Integer = mpz_class;

/// Tractability limits applied to every intermediate value.
struct EvalCaps {
  std::uint32_t max_value_bits = 256;
  std::uint32_t max_exponent_magnitude = 64;
  // When set, x^(p/q) is admitted if the result is exactly rational.
  bool rational_exponents = false;

  void validate() const;
};

enum class BinaryOp : std::uint8_t;
class Outcome;

/// Exact rational in canonical form: gcd(|num|, den) = 1, den >= 1.
class ExactValue {
 public:
  ExactValue() : num_(0), den_(1) {}
  explicit ExactValue(long v) : num_(v), den_(1) {}
  explicit ExactValue(const Integer& v) : num_(v), den_(1) {}

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return sgn(num_) == 0; }
  int sign() const { return sgn(num_); }
  std::size_t numerator_bits() const;
  std::size_t denominator_bits() const;

  ExactValue operator-() const { return ExactValue(Integer(-num_), den_, Trusted{}); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Numeric ordering.
  friend std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b);

  friend ExactValue make_rational(const Integer& num, const Integer& den);

 private:
  struct Trusted {};
  ExactValue(Integer num, Integer den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  static ExactValue reduce(Integer num, Integer den);
  friend Outcome apply_binary(BinaryOp, const ExactValue&, const ExactValue&, const EvalCaps&);

  Integer num_;
  Integer den_;
};

/// Throws Error(invalid_value) when den == 0.
ExactValue make_rational(const Integer& num, const Integer& den);

/// Storage order used for byte-deterministic output: numerator, then denominator.
struct CanonicalOrder {
  bool operator()(const ExactValue& a, const ExactValue& b) const {
    int c = cmp(a.numerator(), b.numerator());
    if (c != 0) return c < 0;
    return cmp(a.denominator(), b.denominator()) < 0;
  }
};

struct ExactValueHash {
  std::size_t operator()(const ExactValue& v) const noexcept { return v.hash(); }
};

enum class BinaryOp : std::uint8_t { add, sub, mul, div, pow, pow_neg };

inline constexpr std::array<BinaryOp, 6> kAllBinaryOps = {
    BinaryOp::add, BinaryOp::sub, BinaryOp::mul, BinaryOp::div, BinaryOp::pow, BinaryOp::pow_neg};

const char* to_string(BinaryOp op) noexcept;
/// Witness-grammar spelling: + - * / ^ ^-
const char* symbol(BinaryOp op) noexcept;

enum class Exclusion : std::uint8_t {
  division_by_zero,
  zero_to_zero,
  zero_to_negative,
  non_integer_exponent,
  inexact_root,
  exponent_too_large,
  value_too_large,
  leading_zero,
};

const char* to_string(Exclusion reason) noexcept;
/// True for the reasons caused by EvalCaps rather than by undefined arithmetic.
bool is_cap_exclusion(Exclusion reason) noexcept;

/// Result of an operation: a value, or the reason it was excluded.
class Outcome {
 public:
  Outcome(ExactValue v) : state_(std::move(v)) {}
  Outcome(Exclusion reason) : state_(reason) {}

  bool has_value() const noexcept { return std::holds_alternative<ExactValue>(state_); }
  explicit operator bool() const noexcept { return has_value(); }
  const ExactValue& value() const& { return std::get<ExactValue>(state_); }
  ExactValue&& value() && { return std::get<ExactValue>(std::move(state_)); }
  Exclusion reason() const { return std::get<Exclusion>(state_); }

 private:
  std::variant<ExactValue, Exclusion> state_;
};

/// Total over its domain; never throws for valid values.
Outcome apply_binary(BinaryOp op, const ExactValue& lhs, const ExactValue& rhs, const EvalCaps& caps);

/// Admits `v` only if both numerator and denominator fit max_value_bits.
Outcome within_caps(ExactValue v, const EvalCaps& caps);

/// t = m^k for some m >= 1, k >= 2. Throws Error(invalid_argument) for t < 1.
bool is_perfect_power(const Integer& t);

enum class RadicalFreeVariant : std::uint8_t { not_perfect_power, not_perfect_square, no_filter };

const char* to_string(RadicalFreeVariant variant) noexcept;
RadicalFreeVariant parse_radical_free_variant(std::string_view name);

/// Integers >= 2 that pass the selected radical filter. no_filter keeps every t >= 2.
bool radical_free(const Integer& t, RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power);
bool radical_free(const ExactValue& v, RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power);

/// Exact big-integer power; `exponent` must be small.
Integer integer_pow(const Integer& base, unsigned long exponent);

}  // namespace ordspan
