#pragma once

#include "ordspan/expr.hpp"
#include "ordspan/span.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordspan {

struct FriedmanOptions {
  SpanOptions span;
  // Also try every other ordering of the digits (plain Friedman numbers).
  bool allow_permutation = false;
  std::uint64_t scan_ceiling = 100'000;
};

struct WitnessResult {
  Integer target;
  int base = 10;
  bool is_nice_friedman = false;
  // Set when allow_permutation was requested, or implied by is_nice_friedman.
  bool is_friedman = false;
  std::optional<std::string> witness;
  // Digit order of the witness, which differs from the target's for permuted hits.
  std::string witness_digits;
  OperationCounts ops_used;
  bool cap_hit = false;
};

/// Searches the ordered span of n's own base-b digits for n with a witness
/// that uses at least one of the six binary operations.
WitnessResult is_nice_friedman(const Integer& n, int base, const EvalCaps& caps, const FriedmanOptions& options = {});

struct DensityMember {
  Integer target;
  std::string witness;
};

struct DensityReport {
  int base = 10;
  std::uint64_t limit = 0;
  std::uint64_t found = 0;
  std::vector<DensityMember> members;  // ascending target
  std::vector<Integer> not_found_within_caps;

  std::string ratio() const;  // "F/N" reduced
};

DensityReport scan_density(int base, std::uint64_t limit, const EvalCaps& caps, const FriedmanOptions& options = {});

/// Evaluates, checks digit order against n's base-b digits and the
/// non-concatenation rule and the leading-zero policy. Returns the reason when
/// invalid, nullopt when valid.
std::optional<std::string> check_witness(const Integer& n, int base, const std::string& witness, const EvalCaps& caps,
                                         bool allow_leading_zero = false);

}  // namespace ordspan
