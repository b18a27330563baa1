#pragma once

#include "ordspan/config.hpp"
#include "ordspan/numeric.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace ordspan {

/// A finished computation in a format-neutral shape: a JSON document plus a
/// flat table used for both CSV and the aligned text view.
struct Report {
  std::string kind;
  nlohmann::ordered_json json;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // shown under the text table only
  bool mismatch = false;           // a golden comparison failed

  std::string render(OutputFormat format) const;
};

/// Writes render(format) to `path`, or to stdout when path is empty or "-".
/// Returns the number of bytes written.
std::size_t emit(const Report& report, OutputFormat format, const std::string& path);

/// int64-sized values become JSON numbers, larger ones strings.
nlohmann::ordered_json to_json(const Integer& v);
nlohmann::ordered_json to_json(const std::vector<Integer>& values);
std::string join(const std::vector<Integer>& values, const char* sep = " ");

}  // namespace ordspan
