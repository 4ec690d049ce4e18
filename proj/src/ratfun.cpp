#include "qcalc/ratfun.hpp"

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

bool needs_parens(const PolyQ& p) {
  int terms = 0;
  for (const auto& c : p.coeffs()) terms += sgn(c) != 0;
  return terms > 1;
}

}  // namespace

RationalFunctionQ RationalFunctionQ::make_monic(PolyQ numer, PolyQ denom) {
  if (numer.is_zero()) return {};
  if (denom.lead() != 1) {
    Rational s = 1 / denom.lead();
    numer *= s;
    denom *= s;
  }
  return {std::move(numer), std::move(denom), Canonical{}};
}

RationalFunctionQ::RationalFunctionQ(const PolyQ& numer, const PolyQ& denom) {
  if (denom.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (numer.is_zero()) {
    den_ = PolyQ(1);
    return;
  }
  PolyQ g = gcd(numer, denom);
  if (g.is_one()) {
    *this = make_monic(numer, denom);
  } else {
    *this = make_monic(divexact(numer, g), divexact(denom, g));
  }
}

RationalFunctionQ RationalFunctionQ::q_power(int k) {
  if (k >= 0) return PolyQ::monomial(1, k);
  return {PolyQ(1), PolyQ::monomial(1, -k), Canonical{}};
}

RationalFunctionQ RationalFunctionQ::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return make_monic(den_, num_);
}

RationalFunctionQ RationalFunctionQ::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of a reduced fraction stay reduced.
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{}};
}

Rational RationalFunctionQ::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (sgn(d) == 0) throw PoleAtPoint("pole of " + to_string() + " at q = " + q0.get_str());
  return num_.eval(q0) / d;
}

RationalFunctionQ RationalFunctionQ::scale_variable(const Rational& c) const {
  return {num_.scale_variable(c), den_.scale_variable(c)};
}

RationalFunctionQ RationalFunctionQ::operator-() const { return {-num_, den_, Canonical{}}; }

RationalFunctionQ& RationalFunctionQ::operator+=(const RationalFunctionQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    PolyQ t = num_ + o.num_;
    return *this = RationalFunctionQ(t, den_);
  }
  if (den_.is_one()) {
    return *this = {num_ * o.den_ + o.num_, o.den_, Canonical{}};
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  PolyQ g = gcd(den_, o.den_);
  if (g.is_one()) {
    return *this = {num_ * o.den_ + o.num_ * den_, den_ * o.den_, Canonical{}};
  }
  PolyQ b1 = divexact(den_, g);
  PolyQ d1 = divexact(o.den_, g);
  PolyQ t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = RationalFunctionQ();
  PolyQ g2 = gcd(t, g);
  if (g2.is_one()) return *this = {std::move(t), b1 * o.den_, Canonical{}};
  return *this = make_monic(divexact(t, g2), b1 * divexact(o.den_, g2));
}

RationalFunctionQ& RationalFunctionQ::operator-=(const RationalFunctionQ& o) { return *this += -o; }

RationalFunctionQ& RationalFunctionQ::operator*=(const RationalFunctionQ& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunctionQ();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  PolyQ g1 = gcd(num_, o.den_);
  PolyQ g2 = gcd(o.num_, den_);
  PolyQ a = g1.is_one() ? num_ : divexact(num_, g1);
  PolyQ c = g2.is_one() ? o.num_ : divexact(o.num_, g2);
  PolyQ b = g2.is_one() ? den_ : divexact(den_, g2);
  PolyQ d = g1.is_one() ? o.den_ : divexact(o.den_, g1);
  return *this = make_monic(a * c, b * d);
}

RationalFunctionQ& RationalFunctionQ::operator/=(const RationalFunctionQ& o) { return *this *= o.inverse(); }

std::string RationalFunctionQ::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  const bool fractional = num_.is_constant() && num_.coeffs()[0].get_den() != 1;
  if (needs_parens(num_) || fractional) n = "(" + n + ")";
  if (needs_parens(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

std::string RationalFunctionQ::to_latex() const {
  if (den_.is_one()) return num_.to_latex();
  return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

RationalFunctionQ ratfun_normalize(const PolyQ& numer, const PolyQ& denom) { return {numer, denom}; }

Rational ratfun_eval(const RationalFunctionQ& f, const Rational& q0) { return f.eval(q0); }

}  // namespace qcalc
