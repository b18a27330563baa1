#include "ordspan/span.hpp"

#include "ordspan/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <unordered_map>

namespace ordspan {

void SpanOptions::validate() const {
  if (max_length == 0) throw Error(ErrorCode::config, "max_length must be positive");
  if (max_entries == 0) throw Error(ErrorCode::config, "max_entries must be positive");
  if (jobs == 0) throw Error(ErrorCode::config, "jobs must be positive");
}

namespace detail {

std::optional<std::size_t> SpanTable::find(const ExactValue& v) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), v,
                             [](const SpanEntry& e, const ExactValue& x) { return CanonicalOrder{}(e.value, x); });
  if (it == entries.end() || !(it->value == v)) return std::nullopt;
  return static_cast<std::size_t>(it - entries.begin());
}

struct SpanStore {
  std::map<std::vector<std::uint8_t>, std::unique_ptr<SpanTable>> tables;
  std::unique_ptr<SpanTable> top_without_atom;
};

}  // namespace detail

namespace {

using detail::Derivation;
using detail::SpanEntry;
using detail::SpanTable;

// Witness preference: fewer operations, then shallower, then smaller text.
struct Candidate {
  Derivation how;
  std::uint16_t ops;
  std::uint16_t depth;
  Shape shape;
  std::string text;
};

bool preferred(std::uint16_t ops, std::uint16_t depth, const Candidate& incumbent) {
  if (ops != incumbent.ops) return ops < incumbent.ops;
  return depth < incumbent.depth;
}

bool same_rank(std::uint16_t ops, std::uint16_t depth, const Candidate& incumbent) {
  return ops == incumbent.ops && depth == incumbent.depth;
}

using CandidateMap = std::unordered_map<ExactValue, Candidate, ExactValueHash>;

class TableBuilder {
 public:
  TableBuilder(const EvalCaps& caps, const SpanOptions& options) : caps_(caps), options_(options) {}

  void build(SpanTable& table, bool include_atom) {
    const std::size_t n = table.digits.size();
    CandidateMap best;

    if (include_atom) {
      Outcome atom = atom_value(DigitString(base_, table.digits), options_.allow_leading_zero);
      if (atom) {
        Outcome capped = within_caps(atom.value(), caps_);
        if (capped) {
          std::string text;
          for (auto d : table.digits) text.push_back(digit_char(d));
          best.emplace(std::move(capped).value(), Candidate{Derivation{}, 0, 0, Shape::atom, std::move(text)});
        } else {
          table.cap_hit = true;
        }
      }
    }

    for (std::size_t k = 1; k < n; ++k) {
      const SpanTable& lt = *table.left[k - 1];
      const SpanTable& rt = *table.right[k - 1];
      table.cap_hit = table.cap_hit || lt.cap_hit || rt.cap_hit;
      for (std::size_t i = 0; i < lt.entries.size(); ++i) {
        const SpanEntry& a = lt.entries[i];
        for (std::size_t j = 0; j < rt.entries.size(); ++j) {
          const SpanEntry& b = rt.entries[j];
          const auto ops = static_cast<std::uint16_t>(a.ops + b.ops + 1);
          const auto depth = static_cast<std::uint16_t>(1 + std::max(a.depth, b.depth));
          for (BinaryOp op : kAllBinaryOps) {
            Outcome out = apply_binary(op, a.value, b.value, caps_);
            if (!out) {
              if (is_cap_exclusion(out.reason())) table.cap_hit = true;
              continue;
            }
            Derivation how{NodeKind::binary, op, static_cast<std::uint16_t>(k), static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j)};
            consider(best, std::move(out).value(), how, ops, depth, shape_of(op),
                     [&] { return render_binary(op, a.shape, a.text, b.shape, b.text); });
          }
        }
      }
      check_size(best);
    }

    // Negation closure, derived from the non-negated candidates only: a double
    // negation never beats the value's own witness.
    CandidateMap closed = best;
    for (const auto& [value, cand] : best) {
      if (value.is_zero()) continue;
      Derivation how{NodeKind::negate, BinaryOp::add, 0, 0, 0};
      consider(closed, -value, how, static_cast<std::uint16_t>(cand.ops + 1),
               static_cast<std::uint16_t>(cand.depth + 1), Shape::negate,
               [&] { return render_negate(cand.shape, cand.text); });
    }
    check_size(closed);

    table.entries.clear();
    table.entries.reserve(closed.size());
    for (auto& [value, cand] : closed) {
      table.entries.push_back(SpanEntry{value, cand.how, cand.ops, cand.depth, cand.shape, std::move(cand.text)});
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const SpanEntry& a, const SpanEntry& b) { return CanonicalOrder{}(a.value, b.value); });
    for (auto& e : table.entries) {
      if (e.how.kind == NodeKind::negate) {
        e.how.lhs = static_cast<std::uint32_t>(*table.find(-e.value));
      }
    }
  }

  void set_base(int base) { base_ = base; }

 private:
  template <typename TextFn>
  static void consider(CandidateMap& map, ExactValue value, const Derivation& how, std::uint16_t ops,
                       std::uint16_t depth, Shape shape, TextFn&& text) {
    auto it = map.find(value);
    if (it == map.end()) {
      map.emplace(std::move(value), Candidate{how, ops, depth, shape, text()});
      return;
    }
    Candidate& inc = it->second;
    if (preferred(ops, depth, inc)) {
      inc = Candidate{how, ops, depth, shape, text()};
    } else if (same_rank(ops, depth, inc)) {
      std::string t = text();
      if (t < inc.text) inc = Candidate{how, ops, depth, shape, std::move(t)};
    }
  }

  void check_size(const CandidateMap& map) const {
    if (map.size() > options_.max_entries) {
      throw Error(ErrorCode::resource, "span exceeds " + std::to_string(options_.max_entries) +
                                           " values; raise max_entries or shorten the input");
    }
  }

  const EvalCaps& caps_;
  const SpanOptions& options_;
  int base_ = 10;
};

}  // namespace

Outcome atom_value(const DigitString& run, bool allow_leading_zero) {
  if (run.length() > 1 && run[0] == 0 && !allow_leading_zero) return Exclusion::leading_zero;
  return ExactValue(run.value());
}

SpanLattice::SpanLattice(DigitString source, EvalCaps caps, SpanOptions options)
    : source_(std::move(source)), caps_(caps), options_(options), store_(std::make_shared<detail::SpanStore>()) {
  caps_.validate();
  options_.validate();
  const std::size_t n = source_.length();
  if (n > options_.max_length) {
    throw Error(ErrorCode::resource, "digit string of length " + std::to_string(n) + " exceeds the limit of " +
                                         std::to_string(options_.max_length));
  }

  const auto digits = source_.digits();
  auto content = [&](std::size_t b, std::size_t e) {
    return std::vector<std::uint8_t>(digits.begin() + static_cast<std::ptrdiff_t>(b),
                                     digits.begin() + static_cast<std::ptrdiff_t>(e));
  };

  TableBuilder builder(caps_, options_);
  builder.set_base(source_.base());

  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<SpanTable*> pending;
    for (std::size_t b = 0; b + len <= n; ++b) {
      auto key = content(b, b + len);
      auto [it, inserted] = store_->tables.try_emplace(key);
      if (!inserted) continue;
      it->second = std::make_unique<SpanTable>();
      SpanTable& t = *it->second;
      t.digits = key;
      for (std::size_t k = 1; k < len; ++k) {
        std::vector<std::uint8_t> l(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<std::uint8_t> r(key.begin() + static_cast<std::ptrdiff_t>(k), key.end());
        t.left.push_back(store_->tables.at(l).get());
        t.right.push_back(store_->tables.at(r).get());
      }
      pending.push_back(&t);
    }
    // Tables of one length depend only on shorter ones.
    detail::parallel_for(pending.size(), options_.jobs, [&](std::size_t i) {
      TableBuilder local(caps_, options_);
      local.set_base(source_.base());
      local.build(*pending[i], true);
    });
  }

  if (!options_.include_full_atom) {
    const SpanTable& whole = *store_->tables.at(content(0, n));
    auto top = std::make_unique<SpanTable>();
    top->digits = whole.digits;
    top->left = whole.left;
    top->right = whole.right;
    builder.build(*top, false);
    store_->top_without_atom = std::move(top);
  }
}

SpanSet SpanLattice::span(std::size_t begin, std::size_t end) const {
  DigitString sub = source_.substring(begin, end);
  std::vector<std::uint8_t> key(sub.digits().begin(), sub.digits().end());
  return SpanSet(store_, store_->tables.at(key).get(), std::move(sub));
}

SpanSet SpanLattice::full() const {
  if (store_->top_without_atom) return SpanSet(store_, store_->top_without_atom.get(), source_);
  return span(0, source_.length());
}

std::size_t SpanSet::size() const noexcept { return table_->entries.size(); }

bool SpanSet::cap_hit() const noexcept { return table_->cap_hit; }

const ExactValue& SpanSet::value(std::size_t index) const { return table_->entries.at(index).value; }

std::vector<ExactValue> SpanSet::values() const {
  std::vector<ExactValue> out;
  out.reserve(table_->entries.size());
  for (const auto& e : table_->entries) out.push_back(e.value);
  return out;
}

std::optional<std::size_t> SpanSet::find(const ExactValue& v) const { return table_->find(v); }

namespace {

Expr materialize(const SpanTable& table, std::size_t index, std::size_t begin) {
  const SpanEntry& e = table.entries.at(index);
  switch (e.how.kind) {
    case NodeKind::atom: return Expr::atom(begin, table.digits);
    case NodeKind::negate: return Expr::negate(materialize(table, e.how.lhs, begin));
    case NodeKind::binary: {
      const std::size_t k = e.how.split;
      return Expr::binary(e.how.op, materialize(*table.left[k - 1], e.how.lhs, begin),
                          materialize(*table.right[k - 1], e.how.rhs, begin + k));
    }
  }
  throw Error(ErrorCode::invalid_argument, "corrupt span table");
}

}  // namespace

Expr SpanSet::witness(std::size_t index) const { return materialize(*table_, index, 0); }

const std::string& SpanSet::witness_text(std::size_t index) const { return table_->entries.at(index).text; }

std::size_t SpanSet::witness_operations(std::size_t index) const { return table_->entries.at(index).ops; }

std::vector<Integer> SpanSet::radical_free_integers(RadicalFreeVariant variant) const {
  std::vector<Integer> out;
  for (const auto& e : table_->entries) {
    if (radical_free(e.value, variant)) out.push_back(e.value.numerator());
  }
  return out;  // canonical order is ascending for positive integers
}

SpanSet ordered_span(const DigitString& s, const EvalCaps& caps, const SpanOptions& options) {
  return SpanLattice(s, caps, options).full();
}

std::vector<Integer> new_radical_free(int digit, int base, std::size_t n, const EvalCaps& caps,
                                      RadicalFreeVariant variant, const SpanOptions& options) {
  SpanOptions opts = options;
  opts.include_full_atom = true;
  SpanLattice lattice(DigitString::repeated(digit, base, n), caps, opts);
  std::vector<Integer> seen;
  for (std::size_t m = 1; m < n; ++m) {
    auto rf = lattice.span(0, m).radical_free_integers(variant);
    seen.insert(seen.end(), rf.begin(), rf.end());
  }
  std::sort(seen.begin(), seen.end());
  std::vector<Integer> result;
  for (auto& t : lattice.span(0, n).radical_free_integers(variant)) {
    if (!std::binary_search(seen.begin(), seen.end(), t)) result.push_back(t);
  }
  return result;
}

CardinalityCheck span_cardinality_check(const DigitString& s, const EvalCaps& caps, const SpanOptions& options) {
  SpanOptions opts = options;
  opts.include_full_atom = true;
  SpanSet span = ordered_span(s, caps, opts);
  CardinalityCheck check;
  check.span_size = span.size();
  check.bound = integer_pow(Integer(s.base()), s.length());
  check.tree_count = expression_tree_count(s.length());
  check.lower_bound_only = span.cap_hit();
  const Integer size(static_cast<unsigned long>(check.span_size));
  check.satisfied = (check.lower_bound_only ? check.tree_count : size) < check.bound;
  return check;
}

Integer expression_tree_count(std::size_t l) {
  if (l == 0) throw Error(ErrorCode::invalid_argument, "length must be >= 1");
  // u[m] = 2 * (1 + sum_k 6 u[k] u[m-k]): the atom or a split, then a sign.
  std::vector<Integer> u(l + 1);
  for (std::size_t m = 1; m <= l; ++m) {
    Integer sum = 1;
    for (std::size_t k = 1; k < m; ++k) sum += 6 * u[k] * u[m - k];
    u[m] = 2 * sum;
  }
  return u[l];
}

}  // namespace ordspan
