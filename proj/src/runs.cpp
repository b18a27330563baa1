#include "ordspan/runs.hpp"

#include "ordspan/error.hpp"
#include "ordspan/friedman.hpp"
#include "ordspan/published.hpp"

#include <algorithm>
#include <array>

namespace ordspan {

using nlohmann::ordered_json;

namespace {

constexpr std::array<RadicalFreeVariant, 3> kVariants = {
    RadicalFreeVariant::not_perfect_power, RadicalFreeVariant::not_perfect_square, RadicalFreeVariant::no_filter};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string flag(const std::optional<bool>& b) { return b ? yes_no(*b) : ""; }

std::vector<Integer> to_integers(std::span<const long> values) {
  return std::vector<Integer>(values.begin(), values.end());
}

std::string tuple_text(const ValueTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += t[i].get_str();
  }
  return out + ")";
}

ordered_json tuple_json(const ValueTuple& t) { return to_json(t); }

std::string blocks_text(const std::vector<std::size_t>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "|";
    out += std::to_string(blocks[i]);
  }
  return out;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

ordered_json caps_json(const RunConfig& c) {
  return ordered_json{{"max_bits", c.caps.max_value_bits},
                      {"max_exp", c.caps.max_exponent_magnitude},
                      {"rational_exponents", c.caps.rational_exponents},
                      {"allow_leading_zero", c.allow_leading_zero}};
}

DigitString source_of(const RunConfig& c, std::size_t n) {
  if (!c.source.empty()) return DigitString::parse(c.source, c.base);
  return DigitString::repeated(c.effective_digit(), c.base, n);
}

Integer parse_target(const std::string& text) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0 || sgn(v) <= 0) {
    throw Error(ErrorCode::config, "target must be a positive decimal integer, got '" + text + "'");
  }
  return v;
}

ordered_json verdict_json(const DensityVerdict& v) {
  return ordered_json{{"polynomial", v.polynomial.to_string()},
                      {"value_at_base", to_json(v.value_at_base)},
                      {"largest_root", {{"lo", rational_text(v.largest_root.lo)},
                                        {"hi", rational_text(v.largest_root.hi)}}},
                      {"conclusion", to_string(v.conclusion)}};
}

std::vector<Integer> counts_from(const SpanLattice& lattice, std::size_t m, RadicalFreeVariant variant) {
  std::vector<Integer> counts;
  std::vector<Integer> seen;
  for (std::size_t n = 1; n <= m; ++n) {
    auto rf = lattice.span(0, n).radical_free_integers(variant);
    long fresh = 0;
    for (const auto& t : rf) fresh += std::binary_search(seen.begin(), seen.end(), t) ? 0 : 1;
    counts.emplace_back(fresh);
    seen.insert(seen.end(), rf.begin(), rf.end());
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  }
  return counts;
}

}  // namespace

TableOneReport compute_table(const RunConfig& config) {
  config.validate();
  TableOneReport report;
  report.base = config.base;
  report.digit = config.effective_digit();
  report.variant = config.variant;
  report.golden = report.base == 2 && report.digit == 1;
  const std::size_t max_n = config.effective_max_n();

  RepeatedDigitAnalysis analysis(report.digit, report.base, max_n, config.caps, config.variant,
                                 config.span_options());
  const auto published_counts = published::counts_for(report.base, report.digit);

  for (std::size_t n = 1; n <= max_n; ++n) {
    TableRow row;
    row.n = n;
    row.numeral = analysis.span(n).source().to_string();
    row.new_radical_free = analysis.new_radical_free(n);
    row.count = row.new_radical_free.size();
    row.n_prime = max_prefix_code_size(analysis.tuples(n)).max_prefix_code_size;
    const auto fresh = analysis.new_tuples(n, Difference::previous);
    row.new_tuples = fresh.size();
    row.new_tuples_all_smaller = analysis.new_tuples(n, Difference::all_smaller).size();
    row.new_tuples_prefix_code = is_prefix_code(fresh);
    row.cap_hit = analysis.cap_hit(n);
    for (auto v : kVariants) {
      row.count_by_variant.push_back(v == config.variant ? row.count : analysis.new_radical_free(n, v).size());
    }

    if (report.golden && n <= published::kBinaryRows.size()) {
      const auto& p = published::kBinaryRows[n - 1];
      if (p.new_radical_free) {
        row.published_new_radical_free = to_integers(*p.new_radical_free);
        row.set_match = *row.published_new_radical_free == row.new_radical_free;
      }
      row.published_count = p.count;
      row.published_n_prime = p.n_prime;
      row.count_match = static_cast<long>(row.count) == p.count;
      row.n_prime_match = static_cast<long>(row.n_prime) == p.n_prime;
    } else if (published_counts && n <= published_counts->size()) {
      row.published_count = (*published_counts)[n - 1];
      row.count_match = static_cast<long>(row.count) == *row.published_count;
    }
    if (report.golden) {
      for (const auto& m : {row.set_match, row.count_match, row.n_prime_match}) {
        if (m && !*m) report.mismatch = true;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

RecomputedCounts recompute_counts(const RunConfig& config, std::size_t max_degree) {
  config.validate();
  const std::size_t start = config.effective_max_n();
  max_degree = std::max(max_degree, start);
  RecomputedCounts out;
  for (std::size_t m = start; m <= max_degree; ++m) {
    SpanLattice lattice(DigitString::repeated(config.effective_digit(), config.base, m), config.caps,
                        config.span_options());
    out.counts = counts_from(lattice, m, config.variant);
    out.cap_hit = false;
    for (std::size_t n = 1; n <= m; ++n) out.cap_hit = out.cap_hit || lattice.span(0, n).cap_hit();
    out.extended = m > start;
    bool positive = false;
    for (const auto& c : out.counts) positive = positive || sgn(c) > 0;
    if (positive && sgn(build_polynomial(out.counts).evaluate(Integer(config.base))) < 0) break;
  }
  return out;
}

Report run_span(const RunConfig& config) {
  config.validate();
  const DigitString s = source_of(config, config.effective_n());
  SpanSet span = ordered_span(s, config.caps, config.span_options());
  const CardinalityCheck check = span_cardinality_check(s, config.caps, config.span_options());

  Report r;
  r.kind = "span";
  r.columns = {"value", "witness", "operations"};
  auto entries = ordered_json::array();
  for (std::size_t i = 0; i < span.size(); ++i) {
    const std::string value = span.value(i).to_string();
    entries.push_back({{"value", value}, {"witness", span.witness_text(i)}, {"operations", span.witness_operations(i)}});
    r.rows.push_back({value, span.witness_text(i), std::to_string(span.witness_operations(i))});
  }
  r.json = ordered_json{{"kind", "span"},
                        {"source", s.to_string()},
                        {"base", config.base},
                        {"caps", caps_json(config)},
                        {"size", span.size()},
                        {"cap_hit", span.cap_hit()},
                        {"cardinality_bound", to_json(check.bound)},
                        {"below_bound", check.satisfied},
                        {"entries", std::move(entries)}};
  r.notes.push_back("size " + std::to_string(span.size()) + ", bound " + check.bound.get_str() +
                    (span.cap_hit() ? ", caps dropped candidates" : ""));
  return r;
}

Report run_table(const RunConfig& config) {
  const TableOneReport t = compute_table(config);
  Report r;
  r.kind = "table";
  r.mismatch = t.mismatch;
  r.columns = {"n", "numeral", "new_radical_free", "count", "n_prime", "new_tuples", "new_tuples_all_smaller",
               "new_tuples_prefix_code", "cap_hit", "published_new_radical_free", "published_count",
               "published_n_prime", "set_match", "count_match", "n_prime_match"};

  auto rows = ordered_json::array();
  auto discrepancy = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json j{{"n", row.n},
                   {"numeral", row.numeral},
                   {"new_radical_free", to_json(row.new_radical_free)},
                   {"count", row.count},
                   {"n_prime", row.n_prime},
                   {"new_tuples", row.new_tuples},
                   {"new_tuples_all_smaller", row.new_tuples_all_smaller},
                   {"new_tuples_prefix_code", row.new_tuples_prefix_code},
                   {"cap_hit", row.cap_hit}};
    if (row.published_new_radical_free) j["published_new_radical_free"] = to_json(*row.published_new_radical_free);
    if (row.published_count) j["published_count"] = *row.published_count;
    if (row.published_n_prime) j["published_n_prime"] = *row.published_n_prime;
    if (row.set_match) j["set_match"] = *row.set_match;
    if (row.count_match) j["count_match"] = *row.count_match;
    if (row.n_prime_match) j["n_prime_match"] = *row.n_prime_match;
    rows.push_back(std::move(j));

    const bool differs = (row.count_match && !*row.count_match) || (row.set_match && !*row.set_match) ||
                         (row.n_prime_match && !*row.n_prime_match);
    if (differs) {
      ordered_json d{{"n", row.n}, {"computed_count", row.count}};
      if (row.published_count) d["published_count"] = *row.published_count;
      ordered_json by_variant = ordered_json::object();
      for (std::size_t i = 0; i < kVariants.size(); ++i) by_variant[to_string(kVariants[i])] = row.count_by_variant[i];
      d["count_by_variant"] = std::move(by_variant);
      discrepancy.push_back(std::move(d));
    }

    r.rows.push_back({std::to_string(row.n), row.numeral, join(row.new_radical_free), std::to_string(row.count),
                      std::to_string(row.n_prime), std::to_string(row.new_tuples),
                      std::to_string(row.new_tuples_all_smaller), yes_no(row.new_tuples_prefix_code),
                      yes_no(row.cap_hit),
                      row.published_new_radical_free ? join(*row.published_new_radical_free) : "",
                      row.published_count ? std::to_string(*row.published_count) : "",
                      row.published_n_prime ? std::to_string(*row.published_n_prime) : "", flag(row.set_match),
                      flag(row.count_match), flag(row.n_prime_match)});
  }

  r.json = ordered_json{{"kind", "table"},
                        {"base", t.base},
                        {"digit", t.digit},
                        {"radical_free_variant", to_string(t.variant)},
                        {"caps", caps_json(config)},
                        {"golden", t.golden},
                        {"mismatch", t.mismatch},
                        {"rows", std::move(rows)},
                        {"discrepancies", std::move(discrepancy)}};
  if (t.mismatch) r.notes.push_back("MISMATCH against the published binary rows");
  for (const auto& d : r.json["discrepancies"]) {
    std::string line = "n=" + std::to_string(d["n"].get<std::size_t>()) + ": computed " +
                       std::to_string(d["computed_count"].get<std::size_t>());
    if (d.contains("published_count")) line += ", published " + std::to_string(d["published_count"].get<long>());
    line += "; by variant:";
    for (const auto& [name, c] : d["count_by_variant"].items()) line += " " + name + "=" + std::to_string(c.get<std::size_t>());
    r.notes.push_back(line);
  }
  return r;
}

Report run_tuples(const RunConfig& config) {
  config.validate();
  const DigitString s = source_of(config, config.effective_n());
  const TupleSpanSet set = tuple_span(s, config.caps, config.span_options(), config.variant);

  Report r;
  r.kind = "tuples";
  r.columns = {"tuple", "blocks"};
  auto tuples = ordered_json::array();
  for (const auto& [t, blocks] : set.tuples) {
    tuples.push_back({{"tuple", tuple_json(t)}, {"blocks", blocks}});
    r.rows.push_back({tuple_text(t), blocks_text(blocks)});
  }
  r.json = ordered_json{{"kind", "tuples"},
                        {"source", s.to_string()},
                        {"base", config.base},
                        {"radical_free_variant", to_string(config.variant)},
                        {"caps", caps_json(config)},
                        {"total", set.tuples.size()},
                        {"cap_hit", set.cap_hit},
                        {"tuples", std::move(tuples)}};
  r.notes.push_back(std::to_string(set.tuples.size()) + " tuples");
  return r;
}

Report run_prefix_code(const RunConfig& config) {
  config.validate();
  const std::size_t n = config.effective_n();
  const int digit = config.effective_digit();
  RepeatedDigitAnalysis analysis(digit, config.base, n, config.caps, config.variant, config.span_options());
  const PrefixCodeReport code = max_prefix_code_size(analysis.tuples(n));
  const auto fresh = analysis.new_tuples(n, Difference::previous);
  const auto fresh_all = analysis.new_tuples(n, Difference::all_smaller);
  const Integer threshold = integer_pow(Integer(config.base), n);

  std::vector<Integer> coefficients = config.coefficients;
  if (coefficients.empty() && config.base == 2 && digit == 1) {
    coefficients = to_integers(published::kBinaryRecurrence);
  }

  Report r;
  r.kind = "prefix-code";
  r.columns = {"leaf", "length"};
  auto leaves = ordered_json::array();
  for (const auto& leaf : code.leaves) {
    leaves.push_back(tuple_json(leaf));
    r.rows.push_back({tuple_text(leaf), std::to_string(leaf.size())});
  }
  ordered_json by_length = ordered_json::object();
  for (const auto& [len, count] : code.leaves_by_length) by_length[std::to_string(len)] = count;

  r.json = ordered_json{{"kind", "prefix-code"},
                        {"base", config.base},
                        {"digit", digit},
                        {"n", n},
                        {"numeral", analysis.span(n).source().to_string()},
                        {"radical_free_variant", to_string(config.variant)},
                        {"caps", caps_json(config)},
                        {"total_tuples", code.total_tuples},
                        {"n_prime", code.max_prefix_code_size},
                        {"leaves_by_length", std::move(by_length)},
                        {"leaves_are_prefix_code", is_prefix_code(code.leaves)},
                        {"threshold", to_json(threshold)},
                        {"exceeds_threshold", Integer(static_cast<unsigned long>(code.max_prefix_code_size)) > threshold},
                        {"new_tuples", fresh.size()},
                        {"new_tuples_all_smaller", fresh_all.size()},
                        {"new_tuples_prefix_code", is_prefix_code(fresh)},
                        {"n_prime_at_least_new_tuples", code.max_prefix_code_size >= fresh.size()},
                        {"cap_hit", analysis.cap_hit(n)}};
  if (!coefficients.empty() && n > coefficients.size()) {
    const RecurrenceCheck rc = analysis.check_recurrence(n, coefficients);
    r.json["recurrence"] = {{"coefficients", to_json(coefficients)},
                            {"lhs", to_json(rc.lhs)},
                            {"rhs", to_json(rc.rhs)},
                            {"satisfied", rc.satisfied}};
    r.notes.push_back("|M(n)| = " + rc.lhs.get_str() + " >= " + rc.rhs.get_str() + ": " + yes_no(rc.satisfied));
  }
  r.json["leaves"] = std::move(leaves);
  r.notes.insert(r.notes.begin(), "N' = " + std::to_string(code.max_prefix_code_size) + " of " +
                                      std::to_string(code.total_tuples) + " tuples, threshold " +
                                      threshold.get_str());
  return r;
}

Report run_growth(const RunConfig& config) {
  config.validate();
  const int digit = config.effective_digit();
  Report r;
  r.kind = "growth";
  r.columns = {"source", "coefficients", "polynomial", "value_at_base", "stated_value_at_base", "root_lo", "root_hi",
               "conclusion"};
  r.json = ordered_json{{"kind", "growth"}, {"base", config.base}, {"digit", digit}};

  auto add = [&](const std::string& label, const std::vector<Integer>& counts, std::optional<long> stated) {
    const DensityVerdict v = density_verdict(counts, config.base);
    ordered_json j{{"coefficients", to_json(counts)}};
    j.update(verdict_json(v));
    std::string stated_text;
    if (stated) {
      j["stated_value_at_base"] = *stated;
      j["stated_sign_agrees"] = (sgn(v.value_at_base) < 0) == (*stated < 0);
      j["stated_value_matches"] = v.value_at_base == *stated;
      stated_text = std::to_string(*stated);
    }
    r.rows.push_back({label, join(counts, " "), v.polynomial.to_string(), v.value_at_base.get_str(), stated_text,
                      rational_text(v.largest_root.lo), rational_text(v.largest_root.hi), to_string(v.conclusion)});
    return j;
  };

  if (!config.coefficients.empty()) {
    r.json["supplied"] = add("supplied", config.coefficients, std::nullopt);
    return r;
  }

  if (auto pub = published::counts_for(config.base, digit)) {
    std::vector<Integer> counts(pub->begin(), pub->end());
    r.json["published"] = add("published", counts, published::value_at_base_for(config.base));
  }
  const RecomputedCounts rc = recompute_counts(config, config.max_length);
  ordered_json j = add("recomputed", rc.counts, std::nullopt);
  j["radical_free_variant"] = to_string(config.variant);
  j["degree_extended"] = rc.extended;
  j["cap_hit"] = rc.cap_hit;
  r.json["recomputed"] = std::move(j);
  return r;
}

Report run_bound(const RunConfig& config) {
  config.validate();
  constexpr int kBoundBase = 28;
  Report r;
  r.kind = "bound";
  r.columns = {"kind", "key", "size", "tree_count", "bound", "holds"};

  auto strings = ordered_json::array();
  bool all_strings = true;
  std::vector<std::uint8_t> digits;
  // Odometer over every string of each length up to bound_length.
  for (std::size_t len = 1; len <= config.bound_length; ++len) {
    std::vector<std::size_t> idx(len, 0);
    for (;;) {
      digits.clear();
      for (auto i : idx) digits.push_back(static_cast<std::uint8_t>(config.bound_digits[i]));
      const DigitString s(kBoundBase, digits);
      const CardinalityCheck c = span_cardinality_check(s, config.caps, config.span_options());
      all_strings = all_strings && c.satisfied;
      strings.push_back({{"source", s.to_string()},
                         {"span_size", c.span_size},
                         {"tree_count", to_json(c.tree_count)},
                         {"bound", to_json(c.bound)},
                         {"holds", c.satisfied},
                         {"lower_bound_only", c.lower_bound_only}});
      r.rows.push_back({"string", s.to_string(), std::to_string(c.span_size), c.tree_count.get_str(), c.bound.get_str(),
                        yes_no(c.satisfied)});
      std::size_t k = len;
      while (k > 0 && ++idx[k - 1] == config.bound_digits.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }

  auto lengths = ordered_json::array();
  bool all_lengths = true;
  for (unsigned long l = 1; l <= config.max_l; ++l) {
    const StringBound b = expression_string_bound(l);
    const bool holds = b.fine < b.coarse;
    all_lengths = all_lengths && holds;
    lengths.push_back({{"l", l}, {"fine", to_json(b.fine)}, {"coarse", to_json(b.coarse)}, {"holds", holds}});
    r.rows.push_back({"length", std::to_string(l), b.fine.get_str(), "", b.coarse.get_str(), yes_no(holds)});
  }

  auto digit_values = ordered_json::array();
  for (int d : config.bound_digits) digit_values.push_back(d);
  r.json = ordered_json{{"kind", "bound"},
                        {"base", kBoundBase},
                        {"digits", std::move(digit_values)},
                        {"max_string_length", config.bound_length},
                        {"caps", caps_json(config)},
                        {"strings_hold", all_strings},
                        {"lengths_hold", all_lengths},
                        {"strings", std::move(strings)},
                        {"lengths", std::move(lengths)}};
  r.mismatch = !(all_strings && all_lengths);
  return r;
}

Report run_verify(const RunConfig& config) {
  config.validate();
  const Integer target = parse_target(config.target);
  FriedmanOptions opts;
  opts.span = config.span_options();
  opts.allow_permutation = config.permute;
  opts.scan_ceiling = config.scan_ceiling;
  const WitnessResult w = is_nice_friedman(target, config.base, config.caps, opts);
  const std::string digits = DigitString::of_integer(target, config.base).to_string();

  std::string status;
  if (w.is_nice_friedman) {
    status = "nice";
  } else if (w.is_friedman) {
    status = "friedman";
  } else {
    status = w.cap_hit ? "not found within caps" : "not nice";
  }

  Report r;
  r.kind = "verify";
  r.columns = {"target", "digits", "status", "witness", "witness_digits"};
  r.rows.push_back({target.get_str(), digits, status, w.witness.value_or(""), w.witness_digits});
  ordered_json ops{{"negate", w.ops_used.negate}, {"add", w.ops_used.add}, {"sub", w.ops_used.sub},
                   {"mul", w.ops_used.mul},       {"div", w.ops_used.div}, {"pow", w.ops_used.pow},
                   {"pow_neg", w.ops_used.pow_neg}};
  r.json = ordered_json{{"kind", "verify"},
                        {"target", to_json(target)},
                        {"base", config.base},
                        {"digits", digits},
                        {"caps", caps_json(config)},
                        {"is_nice_friedman", w.is_nice_friedman},
                        {"status", status}};
  if (config.permute) r.json["is_friedman"] = w.is_friedman;
  r.json["witness"] = w.witness ? ordered_json(*w.witness) : ordered_json(nullptr);
  r.json["witness_digits"] = w.witness ? ordered_json(w.witness_digits) : ordered_json(nullptr);
  r.json["ops_used"] = std::move(ops);
  r.json["cap_hit"] = w.cap_hit;

  if (!config.witness.empty()) {
    std::optional<std::string> problem;
    try {
      problem = check_witness(target, config.base, config.witness, config.caps, config.allow_leading_zero);
    } catch (const SyntaxError& e) {
      problem = e.what();
    }
    r.json["supplied_witness"] = {{"text", config.witness},
                                  {"valid", !problem.has_value()},
                                  {"reason", problem ? ordered_json(*problem) : ordered_json(nullptr)}};
    r.notes.push_back("supplied witness: " + (problem ? "invalid, " + *problem : std::string("valid")));
  }
  return r;
}

Report run_scan(const RunConfig& config) {
  config.validate();
  FriedmanOptions opts;
  opts.span = config.span_options();
  opts.scan_ceiling = config.scan_ceiling;
  const DensityReport d = scan_density(config.base, config.limit, config.caps, opts);

  Report r;
  r.kind = "scan";
  r.columns = {"target", "witness", "verified"};
  auto members = ordered_json::array();
  bool all_verified = true;
  for (const auto& m : d.members) {
    const bool ok =
        !check_witness(m.target, config.base, m.witness, config.caps, config.allow_leading_zero).has_value();
    all_verified = all_verified && ok;
    members.push_back({{"target", to_json(m.target)}, {"witness", m.witness}, {"verified", ok}});
    r.rows.push_back({m.target.get_str(), m.witness, yes_no(ok)});
  }
  r.json = ordered_json{{"kind", "scan"},
                        {"base", d.base},
                        {"limit", d.limit},
                        {"caps", caps_json(config)},
                        {"found", d.found},
                        {"ratio", d.ratio()},
                        {"all_verified", all_verified},
                        {"members", std::move(members)},
                        {"not_found_within_caps", to_json(d.not_found_within_caps)}};
  r.notes.push_back("F = " + std::to_string(d.found) + " of " + std::to_string(d.limit) + " (" + d.ratio() + ")");
  return r;
}

}  // namespace ordspan
