#include "ordspan/digits.hpp"

#include "ordspan/error.hpp"

#include <algorithm>

namespace ordspan {

int digit_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

char digit_char(int digit) noexcept {
  return digit < 10 ? static_cast<char>('0' + digit) : static_cast<char>('a' + digit - 10);
}

void validate_base(int base) {
  if (base < kMinBase || base > kMaxBase) {
    throw Error(ErrorCode::invalid_argument,
                "base " + std::to_string(base) + " outside [" + std::to_string(kMinBase) + ", " +
                    std::to_string(kMaxBase) + "]");
  }
}

DigitString::DigitString(int base, std::vector<std::uint8_t> digits) : base_(base), digits_(std::move(digits)) {
  validate_base(base_);
  if (digits_.empty()) throw Error(ErrorCode::invalid_argument, "digit string must be nonempty");
  for (auto d : digits_) {
    if (d >= base_) {
      throw Error(ErrorCode::invalid_argument,
                  "digit " + std::to_string(d) + " is not valid in base " + std::to_string(base_));
    }
  }
}

DigitString DigitString::parse(std::string_view numeral, int base) {
  validate_base(base);
  std::vector<std::uint8_t> digits;
  digits.reserve(numeral.size());
  for (std::size_t i = 0; i < numeral.size(); ++i) {
    const int d = digit_value(numeral[i]);
    if (d < 0 || d >= base) {
      throw Error(ErrorCode::invalid_argument, "character '" + std::string(1, numeral[i]) + "' at position " +
                                                   std::to_string(i) + " is not a base-" + std::to_string(base) +
                                                   " digit");
    }
    digits.push_back(static_cast<std::uint8_t>(d));
  }
  return DigitString(base, std::move(digits));
}

DigitString DigitString::repeated(int digit, int base, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "repetition count must be >= 1");
  if (digit < 0) throw Error(ErrorCode::invalid_argument, "digit must be nonnegative");
  return DigitString(base, std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(digit)));
}

DigitString DigitString::of_integer(const Integer& n, int base) {
  validate_base(base);
  if (n < 1) throw Error(ErrorCode::invalid_argument, "expected a positive integer, got " + n.get_str());
  std::vector<std::uint8_t> digits;
  Integer rest = n;
  while (sgn(rest) > 0) {
    digits.push_back(static_cast<std::uint8_t>(mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(base))));
    mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(base));
  }
  std::reverse(digits.begin(), digits.end());
  return DigitString(base, std::move(digits));
}

DigitString DigitString::substring(std::size_t begin, std::size_t end) const {
  if (begin >= end || end > digits_.size()) throw Error(ErrorCode::invalid_argument, "bad substring range");
  return DigitString(base_, std::vector<std::uint8_t>(digits_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                       digits_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Integer DigitString::value() const { return numeral_value(digits_, base_); }

std::string DigitString::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (auto d : digits_) out.push_back(digit_char(d));
  return out;
}

Integer numeral_value(std::span<const std::uint8_t> digits, int base) {
  Integer v = 0;
  for (auto d : digits) {
    v *= base;
    v += d;
  }
  return v;
}

}  // namespace ordspan
