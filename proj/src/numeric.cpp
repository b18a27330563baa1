#include "ordspan/numeric.hpp"

#include "ordspan/error.hpp"

#include <vector>

namespace ordspan {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::invalid_value: return "invalid-value";
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::witness_invalid: return "witness-invalid";
    case ErrorCode::resource: return "resource";
    case ErrorCode::config: return "config";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

void EvalCaps::validate() const {
  if (max_value_bits == 0 || max_exponent_magnitude == 0) {
    throw Error(ErrorCode::config, "evaluation caps must be strictly positive");
  }
}

std::size_t ExactValue::numerator_bits() const {
  return sgn(num_) == 0 ? 0 : mpz_sizeinbase(num_.get_mpz_t(), 2);
}

std::size_t ExactValue::denominator_bits() const { return mpz_sizeinbase(den_.get_mpz_t(), 2); }

std::string ExactValue::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::size_t ExactValue::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(sgn(num_) + 2);
  auto mix = [&h](const Integer& z) {
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h = h * 0x100000001b3ULL + limbs;
  };
  mix(num_);
  mix(den_);
  return h;
}

std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b) {
  if (a.den_ == b.den_) {
    int c = cmp(a.num_, b.num_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ExactValue ExactValue::reduce(Integer num, Integer den) {
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && g != 0) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  return ExactValue(std::move(num), std::move(den), Trusted{});
}

ExactValue make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::invalid_value, "zero denominator");
  return ExactValue::reduce(num, den);
}

const char* to_string(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::add: return "add";
    case BinaryOp::sub: return "sub";
    case BinaryOp::mul: return "mul";
    case BinaryOp::div: return "div";
    case BinaryOp::pow: return "pow";
    case BinaryOp::pow_neg: return "pow_neg";
  }
  return "?";
}

const char* symbol(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::pow: return "^";
    case BinaryOp::pow_neg: return "^-";
  }
  return "?";
}

const char* to_string(Exclusion reason) noexcept {
  switch (reason) {
    case Exclusion::division_by_zero: return "division-by-zero";
    case Exclusion::zero_to_zero: return "zero-to-zero";
    case Exclusion::zero_to_negative: return "zero-to-negative";
    case Exclusion::non_integer_exponent: return "non-integer-exponent";
    case Exclusion::inexact_root: return "inexact-root";
    case Exclusion::exponent_too_large: return "exponent-too-large";
    case Exclusion::value_too_large: return "value-too-large";
    case Exclusion::leading_zero: return "leading-zero";
  }
  return "?";
}

bool is_cap_exclusion(Exclusion reason) noexcept {
  return reason == Exclusion::exponent_too_large || reason == Exclusion::value_too_large;
}

namespace {

bool fits(const Integer& z, std::uint32_t max_bits) {
  return sgn(z) == 0 || mpz_sizeinbase(z.get_mpz_t(), 2) <= max_bits;
}

// Lower bound on bit length of |z|^e, used to refuse before computing.
bool power_surely_exceeds(const Integer& z, unsigned long e, std::uint32_t max_bits) {
  if (sgn(z) == 0) return false;
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  if (bits <= 1) return false;
  return (bits - 1) * e + 1 > max_bits;
}

// Exact k-th root of a rational, if one exists.
bool exact_root(const ExactValue& v, unsigned long k, Integer& num_out, Integer& den_out) {
  if (v.sign() < 0 && k % 2 == 0) return false;
  if (mpz_root(num_out.get_mpz_t(), v.numerator().get_mpz_t(), k) == 0) return false;
  if (mpz_root(den_out.get_mpz_t(), v.denominator().get_mpz_t(), k) == 0) return false;
  return true;
}

}  // namespace

Outcome within_caps(ExactValue v, const EvalCaps& caps) {
  if (!fits(v.numerator(), caps.max_value_bits) || !fits(v.denominator(), caps.max_value_bits)) {
    return Exclusion::value_too_large;
  }
  return v;
}

Integer integer_pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Outcome apply_binary(BinaryOp op, const ExactValue& lhs, const ExactValue& rhs, const EvalCaps& caps) {
  const Integer& an = lhs.num_;
  const Integer& ad = lhs.den_;
  const Integer& bn = rhs.num_;
  const Integer& bd = rhs.den_;

  switch (op) {
    case BinaryOp::add:
    case BinaryOp::sub: {
      Integer num = op == BinaryOp::add ? Integer(an * bd + bn * ad) : Integer(an * bd - bn * ad);
      Integer den = ad * bd;
      return within_caps(ExactValue::reduce(std::move(num), std::move(den)), caps);
    }
    case BinaryOp::mul:
      return within_caps(ExactValue::reduce(an * bn, ad * bd), caps);
    case BinaryOp::div:
      if (sgn(bn) == 0) return Exclusion::division_by_zero;
      return within_caps(ExactValue::reduce(an * bd, ad * bn), caps);
    case BinaryOp::pow:
    case BinaryOp::pow_neg:
      break;
  }

  // Exponent p/q, sign folded in for pow_neg.
  const bool negate_exponent = (op == BinaryOp::pow_neg);
  if (bd != 1 && !caps.rational_exponents) return Exclusion::non_integer_exponent;
  if (!fits(bn, 32) || !fits(bd, 32) || abs(bn) > caps.max_exponent_magnitude ||
      bd > caps.max_exponent_magnitude) {
    return Exclusion::exponent_too_large;
  }
  long p = bn.get_si();
  const unsigned long q = bd.get_ui();
  if (negate_exponent) p = -p;

  if (lhs.is_zero()) {
    if (p == 0) return Exclusion::zero_to_zero;
    if (p < 0) return Exclusion::zero_to_negative;
    return ExactValue();
  }

  ExactValue base = lhs;
  if (q != 1) {
    Integer rn, rd;
    if (!exact_root(lhs, q, rn, rd)) return Exclusion::inexact_root;
    base = ExactValue::reduce(std::move(rn), std::move(rd));
  }

  const unsigned long e = static_cast<unsigned long>(p < 0 ? -p : p);
  if (power_surely_exceeds(base.num_, e, caps.max_value_bits) ||
      power_surely_exceeds(base.den_, e, caps.max_value_bits)) {
    return Exclusion::value_too_large;
  }
  Integer num = integer_pow(base.num_, e);
  Integer den = integer_pow(base.den_, e);
  if (p < 0) {
    std::swap(num, den);
    if (sgn(den) < 0) {
      num = -num;
      den = -den;
    }
  }
  // Powers of a reduced fraction stay reduced.
  return within_caps(ExactValue(std::move(num), std::move(den), ExactValue::Trusted{}), caps);
}

namespace {

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<unsigned long> primes;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

bool is_perfect_power(const Integer& t) {
  if (sgn(t) < 1) throw Error(ErrorCode::invalid_argument, "is_perfect_power requires t >= 1");
  if (t == 1) return true;
  // t = m^k with k >= 2 implies t is also a perfect p-th power for any prime p | k.
  const unsigned long log2_floor = mpz_sizeinbase(t.get_mpz_t(), 2) - 1;
  Integer root;
  for (unsigned long k : primes_up_to(log2_floor)) {
    if (mpz_root(root.get_mpz_t(), t.get_mpz_t(), k) != 0) return true;
  }
  return false;
}

const char* to_string(RadicalFreeVariant variant) noexcept {
  switch (variant) {
    case RadicalFreeVariant::not_perfect_power: return "not-perfect-power";
    case RadicalFreeVariant::not_perfect_square: return "not-perfect-square";
    case RadicalFreeVariant::no_filter: return "no-filter";
  }
  return "?";
}

RadicalFreeVariant parse_radical_free_variant(std::string_view name) {
  if (name == "not-perfect-power") return RadicalFreeVariant::not_perfect_power;
  if (name == "not-perfect-square") return RadicalFreeVariant::not_perfect_square;
  if (name == "no-filter") return RadicalFreeVariant::no_filter;
  throw Error(ErrorCode::config, "unknown radical-free variant '" + std::string(name) +
                                     "' (expected not-perfect-power, not-perfect-square or no-filter)");
}

bool radical_free(const Integer& t, RadicalFreeVariant variant) {
  if (t < 2) return false;
  switch (variant) {
    case RadicalFreeVariant::not_perfect_power: return !is_perfect_power(t);
    case RadicalFreeVariant::not_perfect_square: return mpz_perfect_square_p(t.get_mpz_t()) == 0;
    case RadicalFreeVariant::no_filter: return true;
  }
  return false;
}

bool radical_free(const ExactValue& v, RadicalFreeVariant variant) {
  return v.is_integer() && radical_free(v.numerator(), variant);
}

}  // namespace ordspan
