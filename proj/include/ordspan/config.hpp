#pragma once

#include "ordspan/numeric.hpp"
#include "ordspan/span.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordspan {

unsigned default_jobs() noexcept;

enum class OutputFormat { json, csv, table };

const char* to_string(OutputFormat f) noexcept;
OutputFormat parse_output_format(std::string_view name);

/// Everything a CLI run can be parameterized by. Every field has a key in the
/// config-file format; see set().
struct RunConfig {
  int base = 2;
  std::optional<int> digit;             // repeated digit; defaults to base - 1
  std::optional<std::size_t> max_n;     // table / growth rows; defaults to 7 in base 2, else 6
  std::optional<std::size_t> n;         // prefix-code length; defaults to max_n
  std::vector<Integer> coefficients;    // growth counts / recurrence coefficients
  EvalCaps caps;
  RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power;
  bool allow_leading_zero = false;
  std::size_t max_length = 12;
  std::size_t max_entries = 4'000'000;
  unsigned jobs = default_jobs();
  OutputFormat format = OutputFormat::json;
  std::string out;                      // empty: stdout
  std::uint64_t limit = 200;            // scan range [1, limit]
  std::uint64_t scan_ceiling = 100'000;
  bool permute = false;
  unsigned long max_l = 32;             // string-bound lengths 1..max_l
  std::vector<int> bound_digits = {1, 7, 27};  // digit values in base 28
  std::size_t bound_length = 3;
  std::string source;   // digit string for span / tuples; empty means [digit]^n
  std::string target;   // decimal integer for verify
  std::string witness;  // optional expression to check in verify

  int effective_digit() const;
  std::size_t effective_max_n() const;
  std::size_t effective_n() const;
  SpanOptions span_options() const;

  /// Applies one key/value pair; '-' and '_' are interchangeable in keys.
  /// Throws Error(config) for unknown keys or malformed values.
  void set(std::string_view key, std::string_view value);
  /// Reads "key = value" lines; '#' starts a comment.
  void load_file(const std::string& path);
  void validate() const;
};

std::vector<Integer> parse_integer_list(std::string_view text);

}  // namespace ordspan
