#include "ordspan/friedman.hpp"

#include "ordspan/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <tuple>

namespace ordspan {

namespace {

struct Found {
  std::string text;
  std::size_t ops = 0;
  std::size_t depth = 0;
  Expr expr;
  std::string digits;
};

std::optional<Found> search(const DigitString& digits, const Integer& target, const EvalCaps& caps,
                            const SpanOptions& options, bool& cap_hit) {
  SpanOptions opts = options;
  opts.include_full_atom = false;
  SpanSet span = SpanLattice(digits, caps, opts).full();
  cap_hit = cap_hit || span.cap_hit();
  auto idx = span.find(ExactValue(target));
  if (!idx) return std::nullopt;
  Expr e = span.witness(*idx);
  return Found{span.witness_text(*idx), e.operation_count(), e.depth(), e, digits.to_string()};
}

bool has_leading_zero_atom(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::atom: return e.atom_digits().size() > 1 && e.atom_digits()[0] == 0;
    case NodeKind::negate: return has_leading_zero_atom(e.child());
    case NodeKind::binary: return has_leading_zero_atom(e.lhs()) || has_leading_zero_atom(e.rhs());
  }
  return false;
}

}  // namespace

WitnessResult is_nice_friedman(const Integer& n, int base, const EvalCaps& caps, const FriedmanOptions& options) {
  const DigitString digits = DigitString::of_integer(n, base);
  WitnessResult result;
  result.target = n;
  result.base = base;

  std::optional<Found> best = search(digits, n, caps, options.span, result.cap_hit);
  result.is_nice_friedman = best.has_value();

  if (!best && options.allow_permutation) {
    std::vector<std::uint8_t> perm(digits.digits().begin(), digits.digits().end());
    std::sort(perm.begin(), perm.end());
    do {
      DigitString candidate(base, perm);
      if (candidate == digits) continue;
      auto hit = search(candidate, n, caps, options.span, result.cap_hit);
      if (hit && (!best || std::tie(hit->ops, hit->depth, hit->text) < std::tie(best->ops, best->depth, best->text))) {
        best = std::move(hit);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  result.is_friedman = best.has_value();
  if (best) {
    result.witness = best->text;
    result.witness_digits = best->digits;
    result.ops_used = count_operations(best->expr);
  }
  return result;
}

std::string DensityReport::ratio() const {
  if (limit == 0) return "0";
  mpq_class q(Integer(static_cast<unsigned long>(found)), Integer(static_cast<unsigned long>(limit)));
  q.canonicalize();
  return q.get_str();
}

DensityReport scan_density(int base, std::uint64_t limit, const EvalCaps& caps, const FriedmanOptions& options) {
  validate_base(base);
  if (limit < 1) throw Error(ErrorCode::invalid_argument, "scan limit must be >= 1");
  if (limit > options.scan_ceiling) {
    throw Error(ErrorCode::resource, "scan limit " + std::to_string(limit) + " exceeds the ceiling of " +
                                         std::to_string(options.scan_ceiling));
  }
  FriedmanOptions per_target = options;
  per_target.allow_permutation = false;
  SpanOptions inner = options.span;
  inner.jobs = 1;
  per_target.span = inner;

  std::vector<WitnessResult> results(limit);
  detail::parallel_for(limit, options.span.jobs, [&](std::size_t i) {
    results[i] = is_nice_friedman(Integer(static_cast<unsigned long>(i + 1)), base, caps, per_target);
  });

  DensityReport report;
  report.base = base;
  report.limit = limit;
  for (auto& r : results) {
    if (r.is_nice_friedman) {
      report.members.push_back(DensityMember{r.target, *r.witness});
    } else if (r.cap_hit) {
      report.not_found_within_caps.push_back(r.target);
    }
  }
  report.found = report.members.size();
  return report;
}

std::optional<std::string> check_witness(const Integer& n, int base, const std::string& witness,
                                         const EvalCaps& caps, bool allow_leading_zero) {
  const DigitString digits = DigitString::of_integer(n, base);
  Expr e = parse_witness(witness, base);
  if (!e.has_binary_operation()) return "witness uses no binary operation";
  if (!e.preserves_digit_order()) return "atoms are not in digit order";
  if (!allow_leading_zero && has_leading_zero_atom(e)) return "multi-digit atom with a leading zero";
  const auto leaves = e.leaf_digits();
  if (!std::equal(leaves.begin(), leaves.end(), digits.digits().begin(), digits.digits().end())) {
    return "witness digits do not match " + digits.to_string();
  }
  try {
    ExactValue v = eval_witness(e, base, caps);
    if (!(v == ExactValue(n))) return "witness evaluates to " + v.to_string();
  } catch (const Error& err) {
    return err.what();
  }
  return std::nullopt;
}

}  // namespace ordspan
