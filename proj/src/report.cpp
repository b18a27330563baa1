#include "ordspan/report.hpp"

#include "ordspan/error.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>

namespace ordspan {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Report& r) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(r.columns);
  for (const auto& row : r.rows) line(row);
  return out;
}

std::string render_table(const Report& r) {
  std::vector<std::size_t> width(r.columns.size(), 0);
  for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += "  ";
      text += cells[i];
      if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
    }
    out += text + '\n';
  };
  line(r.columns);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : r.rows) line(row);
  for (const auto& note : r.notes) out += note + '\n';
  return out;
}

}  // namespace

std::string Report::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::json: return json.dump(2) + "\n";
    case OutputFormat::csv: return render_csv(*this);
    case OutputFormat::table: return render_table(*this);
  }
  return {};
}

std::size_t emit(const Report& report, OutputFormat format, const std::string& path) {
  const std::string bytes = report.render(format);
  if (path.empty() || path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::io, "failed writing to stdout");
    return bytes.size();
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot open '" + path + "' for writing: " + std::strerror(errno));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::io, "failed writing '" + path + "'");
  return bytes.size();
}

nlohmann::ordered_json to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

nlohmann::ordered_json to_json(const std::vector<Integer>& values) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  return arr;
}

std::string join(const std::vector<Integer>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

}  // namespace ordspan
