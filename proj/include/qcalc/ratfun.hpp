#pragma once

#include <string>

#include "qcalc/poly.hpp"

namespace qcalc {

/// Element of Q(q) kept in canonical form: gcd(numer, denom) = 1 and denom
/// monic. Two values are equal exactly when their representations are.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : den_(1) {}
  RationalFunctionQ(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  RationalFunctionQ(const Rational& c) : num_(c), den_(1) {}     // NOLINT(google-explicit-constructor)
  RationalFunctionQ(const PolyQ& p) : num_(p), den_(1) {}        // NOLINT(google-explicit-constructor)
  /// Normalizing constructor; throws DivisionByZero for a zero denominator.
  RationalFunctionQ(const PolyQ& numer, const PolyQ& denom);

  static RationalFunctionQ q() { return PolyQ::q(); }
  /// q^k for any integer k.
  static RationalFunctionQ q_power(int k);

  const PolyQ& numer() const { return num_; }
  const PolyQ& denom() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunctionQ inverse() const;
  RationalFunctionQ pow(int e) const;
  /// Exact value at q0; throws PoleAtPoint where the reduced denominator vanishes.
  Rational eval(const Rational& q0) const;
  /// f(c*q).
  RationalFunctionQ scale_variable(const Rational& c) const;

  RationalFunctionQ operator-() const;
  RationalFunctionQ& operator+=(const RationalFunctionQ& o);
  RationalFunctionQ& operator-=(const RationalFunctionQ& o);
  RationalFunctionQ& operator*=(const RationalFunctionQ& o);
  RationalFunctionQ& operator/=(const RationalFunctionQ& o);

  friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ& b) { return a += b; }
  friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ& b) { return a -= b; }
  friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ& b) { return a *= b; }
  friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ& b) { return a /= b; }
  friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "-1/(1+q)", "1+q+q^2", "1/2".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  struct Canonical {};
  RationalFunctionQ(PolyQ numer, PolyQ denom, Canonical) : num_(std::move(numer)), den_(std::move(denom)) {}
  static RationalFunctionQ make_monic(PolyQ numer, PolyQ denom);

  PolyQ num_;
  PolyQ den_;
};

inline bool is_zero(const RationalFunctionQ& f) { return f.is_zero(); }

/// Reduces numer/denom to canonical form.
RationalFunctionQ ratfun_normalize(const PolyQ& numer, const PolyQ& denom);
Rational ratfun_eval(const RationalFunctionQ& f, const Rational& q0);

}  // namespace qcalc
