#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcalc/rational.hpp"

namespace qcalc {

/// v_p of a value; `at_least` marks a value that is zero to its known precision.
struct Valuation {
  int value = 0;
  bool at_least = false;
  std::string to_string() const;
};

/// Element of Q_p known modulo p^precision (absolute precision).
/// Stored as p^valuation * unit with the unit known mod p^(precision - valuation).
/// Residues must fit a 64-bit word; exceeding that throws PrecisionExhausted.
class PadicValue {
 public:
  static PadicValue zero(std::uint64_t p, int precision);
  static PadicValue from_integer(std::uint64_t p, const Integer& x, int precision);
  /// Denominators divisible by p give negative valuations.
  static PadicValue from_rational(std::uint64_t p, const Rational& x, int precision);

  std::uint64_t prime() const { return p_; }
  /// Absolute precision ("known_precision").
  int precision() const { return precision_; }
  int relative_precision() const { return precision_ - valuation_; }
  bool is_zero() const { return unit_ == 0; }
  bool is_unit() const { return !is_zero() && valuation_ == 0; }
  Valuation valuation() const;

  /// Representative in [0, p^precision) of an integral value; throws NonUnit
  /// when the valuation is negative.
  std::uint64_t residue() const;
  /// "r" for integral values, "r/p^e" when the valuation is -e < 0.
  std::string residue_string() const;

  /// Same value with precision lowered to min(precision, digits).
  PadicValue with_precision(int digits) const;

  /// Inverse of a unit of Z_p; throws NonUnit otherwise.
  PadicValue inverse() const;
  /// Integer power; negative exponents need a unit.
  PadicValue pow(long e) const;

  PadicValue operator-() const;
  friend PadicValue operator+(const PadicValue& a, const PadicValue& b);
  friend PadicValue operator-(const PadicValue& a, const PadicValue& b) { return a + (-b); }
  friend PadicValue operator*(const PadicValue& a, const PadicValue& b);
  /// Division in Q_p; throws DivisionByZero when b is zero to its precision.
  friend PadicValue operator/(const PadicValue& a, const PadicValue& b);
  PadicValue& operator+=(const PadicValue& o) { return *this = *this + o; }
  PadicValue& operator*=(const PadicValue& o) { return *this = *this * o; }

  /// Structural equality (same prime, precision, valuation and unit).
  friend bool operator==(const PadicValue& a, const PadicValue& b) = default;

 private:
  PadicValue(std::uint64_t p, int valuation, std::uint64_t unit, int precision)
      : p_(p), valuation_(valuation), unit_(unit), precision_(precision) {}
  static PadicValue from_residue(std::uint64_t p, std::uint64_t x, int base_valuation, int precision);

  std::uint64_t p_ = 3;
  int valuation_ = 0;  // equals precision_ for a zero value
  std::uint64_t unit_ = 0;
  int precision_ = 0;
};

/// v_p(a - b); marked `at_least` when the difference vanishes to its precision.
Valuation agreement(const PadicValue& a, const PadicValue& b);

enum class PadicOp { add, sub, mul, inv, pow };
PadicValue padic_arith(const PadicValue& a, const PadicValue& b, PadicOp kind, long exponent = 0);

/// p odd prime, working precision N, and an admissible q (a unit with v_p(q-1) >= 1).
struct PadicContext {
  std::uint64_t p = 3;
  int precision = 8;
  Rational q = 4;

  PadicValue q_value() const { return PadicValue::from_rational(p, q, precision); }
  PadicValue embed(const Rational& r, int extra_digits = 0) const {
    return PadicValue::from_rational(p, r, precision + extra_digits);
  }
};

/// Validates and builds a context; throws InadmissibleContext.
PadicContext make_padic_context(std::uint64_t p, int precision, const Rational& q);

bool is_prime(std::uint64_t n);

enum class IntegrandTag { constant, power_xq, qpow, qbinom_x, bernstein, custom_samples };

struct IntegrandSpec {
  IntegrandTag tag = IntegrandTag::constant;
  int a = 0;  // n for power_xq / qbinom_x, m for qpow, k for bernstein
  int b = 0;  // n for bernstein
  std::vector<Rational> samples;  // f(0), f(1), ... for custom_samples

  static IntegrandSpec constant() { return {}; }
  static IntegrandSpec power_xq(int n) { return {IntegrandTag::power_xq, n, 0, {}}; }
  static IntegrandSpec qpow(int m) { return {IntegrandTag::qpow, m, 0, {}}; }
  static IntegrandSpec qbinom_x(int n) { return {IntegrandTag::qbinom_x, n, 0, {}}; }
  static IntegrandSpec bernstein(int k, int n) { return {IntegrandTag::bernstein, k, n, {}}; }
  static IntegrandSpec custom(std::vector<Rational> values) {
    return {IntegrandTag::custom_samples, 0, 0, std::move(values)};
  }

  std::string to_string() const;
};

/// (1/[p^level]_q) sum_{x < p^level} f(x) q^x, known to the context precision.
PadicValue riemann_integral(const PadicContext& ctx, const IntegrandSpec& f, int level);

struct ProfileRow {
  int level = 0;
  PadicValue value = PadicValue::zero(3, 0);
  std::optional<Valuation> agreement;  // v_p(value - target) when a target is given
};

std::vector<ProfileRow> convergence_profile(const PadicContext& ctx, const IntegrandSpec& f, int first_level,
                                            int last_level, const std::optional<Rational>& target);

struct TailSum {
  PadicValue value = PadicValue::zero(3, 0);
  int cutoff = 0;  // terms 0..cutoff-1 were summed
};

/// Sums term(0), term(1), ... up to the first index M with M*rate + offset >= N,
/// where v_p(term(m)) >= m*rate + offset. Throws DivergentTail when rate < 1.
TailSum truncated_tail_sum(const PadicContext& ctx, const std::function<PadicValue(int)>& term, int rate,
                           int offset = 0);

}  // namespace qcalc
