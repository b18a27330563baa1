#include "ordspan/config.hpp"

#include "ordspan/digits.hpp"
#include "ordspan/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <thread>

namespace ordspan {

unsigned default_jobs() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

const char* to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::table: return "table";
  }
  return "?";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "table") return OutputFormat::table;
  throw Error(ErrorCode::config, "unknown format '" + std::string(name) + "' (expected json, csv or table)");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_unsigned(std::string_view key, std::string_view value, T min_value = 0) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || out < min_value) {
    throw Error(ErrorCode::config, "bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::config, "bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw Error(ErrorCode::config, "bad boolean '" + std::string(value) + "' for " + std::string(key));
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = trim(text.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

}  // namespace

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  for (const auto& item : split_list(text)) {
    Integer v;
    if (v.set_str(item, 10) != 0) throw Error(ErrorCode::config, "bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int RunConfig::effective_digit() const { return digit.value_or(base - 1); }

std::size_t RunConfig::effective_max_n() const { return max_n.value_or(base == 2 ? 7 : 6); }

std::size_t RunConfig::effective_n() const { return n.value_or(effective_max_n()); }

SpanOptions RunConfig::span_options() const {
  SpanOptions o;
  o.max_length = max_length;
  o.allow_leading_zero = allow_leading_zero;
  o.jobs = jobs;
  o.max_entries = max_entries;
  return o;
}

void RunConfig::set(std::string_view raw_key, std::string_view raw_value) {
  std::string key(trim(raw_key));
  std::replace(key.begin(), key.end(), '-', '_');
  const std::string_view value = trim(raw_value);

  if (key == "base") {
    base = parse_int(key, value);
  } else if (key == "digit") {
    digit = parse_int(key, value);
  } else if (key == "max_n") {
    max_n = parse_unsigned<std::size_t>(key, value, 1);
  } else if (key == "n") {
    n = parse_unsigned<std::size_t>(key, value, 1);
  } else if (key == "coefficients" || key == "counts") {
    coefficients = parse_integer_list(value);
  } else if (key == "max_bits") {
    caps.max_value_bits = parse_unsigned<std::uint32_t>(key, value, 1);
  } else if (key == "max_exp") {
    caps.max_exponent_magnitude = parse_unsigned<std::uint32_t>(key, value, 1);
  } else if (key == "rational_exponents") {
    caps.rational_exponents = parse_bool(key, value);
  } else if (key == "radical_free_variant") {
    variant = parse_radical_free_variant(value);
  } else if (key == "allow_leading_zero") {
    allow_leading_zero = parse_bool(key, value);
  } else if (key == "max_length") {
    max_length = parse_unsigned<std::size_t>(key, value, 1);
  } else if (key == "max_entries") {
    max_entries = parse_unsigned<std::size_t>(key, value, 1);
  } else if (key == "jobs") {
    jobs = parse_unsigned<unsigned>(key, value, 1);
  } else if (key == "format") {
    format = parse_output_format(value);
  } else if (key == "out") {
    out = std::string(value);
  } else if (key == "limit") {
    limit = parse_unsigned<std::uint64_t>(key, value, 1);
  } else if (key == "scan_ceiling") {
    scan_ceiling = parse_unsigned<std::uint64_t>(key, value, 1);
  } else if (key == "permute") {
    permute = parse_bool(key, value);
  } else if (key == "max_l") {
    max_l = parse_unsigned<unsigned long>(key, value, 1);
  } else if (key == "bound_digits") {
    bound_digits.clear();
    for (const auto& item : split_list(value)) bound_digits.push_back(parse_int(key, item));
    if (bound_digits.empty()) throw Error(ErrorCode::config, "bound_digits must not be empty");
  } else if (key == "bound_length") {
    bound_length = parse_unsigned<std::size_t>(key, value, 1);
  } else if (key == "source") {
    source = std::string(value);
  } else if (key == "target") {
    target = std::string(value);
  } else if (key == "witness") {
    witness = std::string(value);
  } else {
    throw Error(ErrorCode::config, "unknown configuration key '" + std::string(raw_key) + "'");
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open config file '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::config, path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      set(view.substr(0, eq), view.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::config, path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void RunConfig::validate() const {
  try {
    validate_base(base);
  } catch (const Error& e) {
    throw Error(ErrorCode::config, e.what());
  }
  const int d = effective_digit();
  if (d < 0 || d >= base) {
    throw Error(ErrorCode::config, "digit " + std::to_string(d) + " is not valid in base " + std::to_string(base));
  }
  caps.validate();
  span_options().validate();
  for (int d : bound_digits) {
    if (d < 0 || d >= 28) throw Error(ErrorCode::config, "bound digit " + std::to_string(d) + " is not a base-28 digit");
  }
  for (const auto& c : coefficients) {
    if (sgn(c) < 0) throw Error(ErrorCode::config, "coefficients must be nonnegative");
  }
}

}  // namespace ordspan
