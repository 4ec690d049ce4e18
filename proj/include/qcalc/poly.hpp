#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Dense univariate polynomial in q over the rationals, ascending degree.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(long c) : PolyQ(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  PolyQ(const Rational& c);               // NOLINT(google-explicit-constructor)
  explicit PolyQ(std::vector<Rational> coeffs);

  static PolyQ monomial(const Rational& c, int degree);
  static PolyQ q() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// Single nonzero term c*q^k.
  bool is_monomial() const;
  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  int low_degree() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return coeffs_.back(); }

  PolyQ monic() const;
  PolyQ shifted(int k) const;  // times q^k, k >= 0
  /// Divides by q^k; all dropped coefficients must be zero.
  PolyQ unshifted(int k) const;
  PolyQ pow(unsigned e) const;
  Rational eval(const Rational& x) const;
  /// p(c*q).
  PolyQ scale_variable(const Rational& c) const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

  /// Ascending rendering with explicit powers: "1+q+2q^2", "1-q", "(1/2)q".
  std::string to_string(char var = 'q') const;
  std::string to_latex(char var = 'q') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder, deg r < deg b. Throws DivisionByZero for b = 0.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

/// Quotient of an exact division; throws InexactDivision on nonzero remainder.
PolyQ divexact(const PolyQ& a, const PolyQ& b);

/// Monic greatest common divisor (zero only when both inputs are zero).
PolyQ gcd(const PolyQ& a, const PolyQ& b);

enum class PolyOp { add, sub, mul, divexact };
PolyQ poly_arith(const PolyQ& a, const PolyQ& b, PolyOp kind);

}  // namespace qcalc
