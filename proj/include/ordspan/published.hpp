#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Published reference values the recomputed tables are compared against.
namespace ordspan::published {

struct BinaryRow {
  std::size_t n;
  // Listed explicitly only for n <= 5; later rows give counts only.
  std::optional<std::vector<long>> new_radical_free;
  long count;
  long n_prime;
};

// Strings [1]^n in base 2.
inline const std::array<BinaryRow, 7> kBinaryRows = {{
    {1, std::vector<long>{}, 0, 0},
    {2, std::vector<long>{2, 3}, 2, 2},
    {3, std::vector<long>{7}, 1, 3},
    {4, std::vector<long>{5, 6, 15}, 3, 8},
    {5, std::vector<long>{10, 12, 14, 21, 26, 28, 31}, 7, 18},
    {6, std::nullopt, 23, 55},
    {7, std::nullopt, 80, 170},
}};

// Partial counts of new radical-free numbers, n = 1..6.
inline constexpr std::array<long, 5> kBinaryCounts = {0, 2, 1, 3, 7};
inline constexpr std::array<long, 6> kTernaryCounts = {1, 1, 4, 22, 98, 454};      // [2]^n base 3
inline constexpr std::array<long, 6> kQuaternaryCounts = {1, 3, 13, 59, 369, 2279};  // [3]^n base 4

// Stated values of P(b) for the polynomials built from the counts above.
inline constexpr long kBinaryValueAtBase = -1;
inline constexpr long kTernaryValueAtBase = -175;
inline constexpr long kQuaternaryValueAtBase = -740;

/// Recurrence coefficients used for [1]^n in base 2.
inline constexpr std::array<long, 5> kBinaryRecurrence = {0, 2, 1, 3, 7};

/// Counts for the repeated digit conventionally used in `base` (2: '1', 3: '2', 4: '3').
inline std::optional<std::vector<long>> counts_for(int base, int digit) {
  if (base == 2 && digit == 1) return std::vector<long>(kBinaryCounts.begin(), kBinaryCounts.end());
  if (base == 3 && digit == 2) return std::vector<long>(kTernaryCounts.begin(), kTernaryCounts.end());
  if (base == 4 && digit == 3) return std::vector<long>(kQuaternaryCounts.begin(), kQuaternaryCounts.end());
  return std::nullopt;
}

inline std::optional<long> value_at_base_for(int base) {
  switch (base) {
    case 2: return kBinaryValueAtBase;
    case 3: return kTernaryValueAtBase;
    case 4: return kQuaternaryValueAtBase;
    default: return std::nullopt;
  }
}

}  // namespace ordspan::published
