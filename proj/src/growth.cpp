#include "ordspan/growth.hpp"

#include "ordspan/error.hpp"

namespace ordspan {

GrowthPolynomial::GrowthPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw Error(ErrorCode::invalid_argument, "growth polynomial needs coefficients");
  bool positive = false;
  for (const auto& c : coefficients_) {
    if (sgn(c) < 0) throw Error(ErrorCode::invalid_argument, "coefficients must be nonnegative");
    positive = positive || sgn(c) > 0;
  }
  if (!positive) throw Error(ErrorCode::invalid_argument, "at least one coefficient must be positive");
}

Integer GrowthPolynomial::evaluate(const Integer& x) const {
  Integer acc = 1;
  for (const auto& c : coefficients_) acc = acc * x - c;
  return acc;
}

Rational GrowthPolynomial::evaluate(const Rational& x) const {
  Rational acc = 1;
  for (const auto& c : coefficients_) {
    acc = acc * x - Rational(c);
    acc.canonicalize();
  }
  return acc;
}

std::string GrowthPolynomial::to_string() const {
  const std::size_t m = coefficients_.size();
  std::string out = m == 1 ? "x" : "x^" + std::to_string(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const Integer& c = coefficients_[i - 1];
    if (sgn(c) == 0) continue;
    const std::size_t power = m - i;
    out += " - ";
    if (c != 1 || power == 0) out += c.get_str();
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

GrowthPolynomial build_polynomial(std::span<const Integer> counts) {
  return GrowthPolynomial(std::vector<Integer>(counts.begin(), counts.end()));
}

GrowthPolynomial build_polynomial(std::initializer_list<long> counts) {
  std::vector<Integer> c;
  for (long v : counts) c.emplace_back(v);
  return GrowthPolynomial(std::move(c));
}

RootEnclosure largest_real_root(const GrowthPolynomial& p, const Rational& precision) {
  if (sgn(precision) <= 0) throw Error(ErrorCode::invalid_argument, "precision must be positive");
  Integer sum = 1;
  for (const auto& c : p.coefficients()) sum += c;

  Rational lo(1);
  Rational hi(sum);
  if (sgn(p.evaluate(Integer(1))) == 0) return {lo, lo};
  if (sgn(p.evaluate(sum)) == 0) return {hi, hi};

  while (hi - lo > precision) {
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    const int s = sgn(p.evaluate(mid));
    if (s == 0) return {mid, mid};
    (s < 0 ? lo : hi) = mid;
  }
  // A monic integer polynomial has only integer rational roots.
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  for (; Rational(k) <= hi; ++k) {
    if (sgn(p.evaluate(k)) == 0) return {Rational(k), Rational(k)};
  }
  return {lo, hi};
}

Integer catalan(unsigned long k) {
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * k, k);
  return binom / (k + 1);
}

StringBound expression_string_bound(unsigned long l) {
  if (l == 0) throw Error(ErrorCode::invalid_argument, "string length must be >= 1");
  StringBound b;
  b.fine = 2 * integer_pow(Integer(7), l - 1) * catalan(l - 1);
  b.coarse = integer_pow(Integer(28), l);
  return b;
}

const char* to_string(DensityConclusion c) noexcept {
  return c == DensityConclusion::criterion_met ? "density-one-criterion-met" : "not-established";
}

DensityVerdict density_verdict(std::span<const Integer> counts, int base, const Rational& precision) {
  if (base < 2) throw Error(ErrorCode::invalid_argument, "base must be >= 2");
  GrowthPolynomial p = build_polynomial(counts);
  DensityVerdict v{base, p, p.evaluate(Integer(base)), {}, DensityConclusion::not_established};
  v.conclusion = sgn(v.value_at_base) < 0 ? DensityConclusion::criterion_met : DensityConclusion::not_established;

  const Rational b(base);
  Rational eps = precision;
  for (;;) {
    v.largest_root = largest_real_root(p, eps);
    if (v.largest_root.lo > b || v.largest_root.hi <= b) break;
    eps /= 2;
  }
  const bool above = v.largest_root.lo > b;
  if (above != (v.conclusion == DensityConclusion::criterion_met)) {
    throw Error(ErrorCode::invalid_value, "root enclosure disagrees with the sign of P(base)");
  }
  return v;
}

}  // namespace ordspan
