#pragma once

#include "ordspan/config.hpp"
#include "ordspan/growth.hpp"
#include "ordspan/report.hpp"
#include "ordspan/tuples.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordspan {

struct TableRow {
  std::size_t n = 0;
  std::string numeral;
  std::vector<Integer> new_radical_free;
  std::size_t count = 0;
  std::size_t n_prime = 0;
  std::size_t new_tuples = 0;              // |T(n) \ T(n-1)|
  std::size_t new_tuples_all_smaller = 0;  // |T(n) \ union of T(m), m < n|
  bool new_tuples_prefix_code = true;
  bool cap_hit = false;

  std::optional<std::vector<Integer>> published_new_radical_free;
  std::optional<long> published_count;
  std::optional<long> published_n_prime;
  std::optional<bool> set_match;
  std::optional<bool> count_match;
  std::optional<bool> n_prime_match;

  // new radical-free counts under each filter, in RadicalFreeVariant order
  std::vector<std::size_t> count_by_variant;
};

struct TableOneReport {
  int base = 2;
  int digit = 1;
  RadicalFreeVariant variant = RadicalFreeVariant::not_perfect_power;
  std::vector<TableRow> rows;
  // Only the base-2 '1' rows are golden; elsewhere mismatches are informational.
  bool golden = false;
  bool mismatch = false;
};

TableOneReport compute_table(const RunConfig& config);

/// Counts c_1..c_m for [digit]^n with P(base) < 0, starting from max_n and
/// extending the degree up to max_degree if needed.
struct RecomputedCounts {
  std::vector<Integer> counts;
  bool extended = false;
  bool cap_hit = false;
};
RecomputedCounts recompute_counts(const RunConfig& config, std::size_t max_degree);

Report run_span(const RunConfig& config);
Report run_table(const RunConfig& config);
Report run_tuples(const RunConfig& config);
Report run_prefix_code(const RunConfig& config);
Report run_growth(const RunConfig& config);
Report run_bound(const RunConfig& config);
Report run_verify(const RunConfig& config);
Report run_scan(const RunConfig& config);

}  // namespace ordspan
