#pragma once

#include "ordspan/numeric.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ordspan {

using Rational = mpq_class;

/// P(x) = x^m - sum_{i=1..m} c_i x^(m-i), c_i >= 0 and not all zero.
/// Descartes' rule gives exactly one positive root g, with P < 0 on (0, g)
/// and P > 0 beyond it.
class GrowthPolynomial {
 public:
  explicit GrowthPolynomial(std::vector<Integer> coefficients);

  std::size_t degree() const noexcept { return coefficients_.size(); }
  const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  /// e.g. "x^5 - 2x^3 - x^2 - 3x - 7"
  std::string to_string() const;

 private:
  std::vector<Integer> coefficients_;
};

/// Throws Error(invalid_argument) for empty or all-zero counts.
GrowthPolynomial build_polynomial(std::span<const Integer> counts);
GrowthPolynomial build_polynomial(std::initializer_list<long> counts);

struct RootEnclosure {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Bisection on [1, 1 + sum c_i] until hi - lo <= precision, keeping
/// P(lo) <= 0 <= P(hi). An integer root inside the final bracket collapses it.
RootEnclosure largest_real_root(const GrowthPolynomial& p, const Rational& precision);

Integer catalan(unsigned long k);

struct StringBound {
  Integer fine;    // 2 * 7^(l-1) * C(l-1)
  Integer coarse;  // 28^l
};

/// Count of normalized expression strings over l digits: an optional leading
/// negation, one of 7 choices per digit gap, and a parenthesization.
StringBound expression_string_bound(unsigned long l);

enum class DensityConclusion { criterion_met, not_established };

const char* to_string(DensityConclusion c) noexcept;

struct DensityVerdict {
  int base = 2;
  GrowthPolynomial polynomial;
  Integer value_at_base;
  RootEnclosure largest_root;
  DensityConclusion conclusion = DensityConclusion::not_established;
};

/// Decided by the exact sign of P(base). The enclosure is refined until it
/// sits strictly above the base or at/below it, and must agree with the sign.
DensityVerdict density_verdict(std::span<const Integer> counts, int base,
                               const Rational& precision = Rational(1, 1 << 20));

}  // namespace ordspan
