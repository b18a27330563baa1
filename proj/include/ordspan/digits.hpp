#pragma once

#include "ordspan/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordspan {

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 36;

/// Maps 0-9a-z to digit values; returns -1 for anything else.
int digit_value(char c) noexcept;
char digit_char(int digit) noexcept;

/// A nonempty base-b digit sequence, most significant digit first.
class DigitString {
 public:
  DigitString(int base, std::vector<std::uint8_t> digits);

  /// Parses "1111", "22", "1z" etc.; every character must be a digit < base.
  static DigitString parse(std::string_view numeral, int base);
  /// [digit]^n
  static DigitString repeated(int digit, int base, std::size_t n);
  /// The base-b representation of a positive integer.
  static DigitString of_integer(const Integer& n, int base);

  int base() const noexcept { return base_; }
  std::size_t length() const noexcept { return digits_.size(); }
  std::span<const std::uint8_t> digits() const noexcept { return digits_; }
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }

  DigitString substring(std::size_t begin, std::size_t end) const;
  /// Positional value of the whole string.
  Integer value() const;
  std::string to_string() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  int base_;
  std::vector<std::uint8_t> digits_;
};

void validate_base(int base);

/// Positional value of a digit run.
Integer numeral_value(std::span<const std::uint8_t> digits, int base);

}  // namespace ordspan
