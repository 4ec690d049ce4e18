#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcalc/ratfun.hpp"

namespace qcalc {

/// Dense polynomial in t with coefficients in Q(q), ascending degree.
class PolyT {
 public:
  PolyT() = default;
  PolyT(const RationalFunctionQ& c);  // NOLINT(google-explicit-constructor)
  explicit PolyT(std::vector<RationalFunctionQ> coeffs);

  static PolyT monomial(const RationalFunctionQ& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monomial() const;
  int low_degree() const;

  const std::vector<RationalFunctionQ>& coeffs() const { return coeffs_; }
  RationalFunctionQ coeff(int i) const;
  const RationalFunctionQ& lead() const { return coeffs_.back(); }

  PolyT monic() const;
  PolyT shifted(int k) const;
  PolyT unshifted(int k) const;
  PolyT pow(unsigned e) const;
  /// p(c*t).
  PolyT scale_variable(const RationalFunctionQ& c) const;
  /// t^deg * p(c/t): the coefficient list reversed and scaled.
  PolyT reflected(const RationalFunctionQ& c) const;
  RationalFunctionQ eval(const RationalFunctionQ& t0) const;

  PolyT operator-() const;
  PolyT& operator+=(const PolyT& o);
  PolyT& operator-=(const PolyT& o);
  PolyT& operator*=(const RationalFunctionQ& c);

  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(const PolyT& a, const PolyT& b);
  friend PolyT operator*(PolyT a, const RationalFunctionQ& c) { return a *= c; }
  friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<RationalFunctionQ> coeffs_;
};

std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b);
PolyT divexact(const PolyT& a, const PolyT& b);
/// Monic gcd over Q(q).
PolyT gcd(const PolyT& a, const PolyT& b);

/// Element of Q(q, t) where t stands for q^x. Canonical: numerator and
/// denominator coprime in Q(q)[t], denominator monic in t. Negative powers
/// of t live in the denominator.
class BivariateElement {
 public:
  BivariateElement() : den_(RationalFunctionQ(1)) {}
  BivariateElement(long c) : BivariateElement(RationalFunctionQ(c)) {}  // NOLINT(google-explicit-constructor)
  BivariateElement(const RationalFunctionQ& c);                          // NOLINT(google-explicit-constructor)
  BivariateElement(const PolyT& numer);                                  // NOLINT(google-explicit-constructor)
  /// Normalizing constructor; throws DivisionByZero for a zero denominator.
  BivariateElement(const PolyT& numer, const PolyT& denom);

  /// t^m for any integer m.
  static BivariateElement t_power(int m);

  const PolyT& numer() const { return num_; }
  const PolyT& denom() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// Denominator equal to 1 (a polynomial in t over Q(q)).
  bool is_polynomial() const { return den_.is_one(); }
  /// Denominator a pure power of t.
  bool is_laurent() const { return den_.is_monomial(); }

  BivariateElement inverse() const;
  BivariateElement pow(int e) const;

  /// Substitutes t -> q^x0, giving an element of Q(q).
  RationalFunctionQ specialize(int x0) const;
  /// Substitutes t -> c*t (e.g. c = 1/q realizes x -> x-1).
  BivariateElement scale_t(const RationalFunctionQ& c) const;
  /// Substitutes t -> q/t, i.e. x -> 1-x.
  BivariateElement reflect() const;
  /// Exponent -> coefficient for a Laurent element; throws NotIntegrable otherwise.
  std::map<int, RationalFunctionQ> laurent_terms() const;

  BivariateElement operator-() const;
  BivariateElement& operator+=(const BivariateElement& o);
  BivariateElement& operator-=(const BivariateElement& o);
  BivariateElement& operator*=(const BivariateElement& o);
  BivariateElement& operator/=(const BivariateElement& o);

  friend BivariateElement operator+(BivariateElement a, const BivariateElement& b) { return a += b; }
  friend BivariateElement operator-(BivariateElement a, const BivariateElement& b) { return a -= b; }
  friend BivariateElement operator*(BivariateElement a, const BivariateElement& b) { return a *= b; }
  friend BivariateElement operator/(BivariateElement a, const BivariateElement& b) { return a /= b; }
  friend bool operator==(const BivariateElement& a, const BivariateElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Canonical {};
  BivariateElement(PolyT numer, PolyT denom, Canonical) : num_(std::move(numer)), den_(std::move(denom)) {}
  static BivariateElement make_monic(PolyT numer, PolyT denom);

  PolyT num_;
  PolyT den_;
};

inline bool is_zero(const BivariateElement& e) { return e.is_zero(); }

/// True iff a - b normalizes to zero.
bool bivar_equal(const BivariateElement& a, const BivariateElement& b);

}  // namespace qcalc
