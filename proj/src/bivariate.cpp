#include "qcalc/bivariate.hpp"

#include <algorithm>

#include "qcalc/errors.hpp"

namespace qcalc {

// ---- PolyT ----------------------------------------------------------------

PolyT::PolyT(const RationalFunctionQ& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

PolyT::PolyT(std::vector<RationalFunctionQ> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyT PolyT::monomial(const RationalFunctionQ& c, int degree) {
  PolyT p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, RationalFunctionQ());
  p.coeffs_.back() = c;
  return p;
}

void PolyT::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool PolyT::is_monomial() const {
  if (coeffs_.empty()) return false;
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return !c.is_zero(); }) == 1;
}

int PolyT::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return 0;
}

RationalFunctionQ PolyT::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

PolyT PolyT::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return *this * lead().inverse();
}

PolyT PolyT::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  PolyT p;
  p.coeffs_.assign(static_cast<std::size_t>(k), RationalFunctionQ());
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

PolyT PolyT::unshifted(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (low_degree() < k) throw InexactDivision("polynomial in t not divisible by t^" + std::to_string(k));
  PolyT p;
  p.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return p;
}

PolyT PolyT::pow(unsigned e) const {
  PolyT result(RationalFunctionQ(1));
  PolyT base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

PolyT PolyT::scale_variable(const RationalFunctionQ& c) const {
  PolyT p = *this;
  RationalFunctionQ f(1);
  for (auto& a : p.coeffs_) {
    a *= f;
    f *= c;
  }
  p.trim();
  return p;
}

PolyT PolyT::reflected(const RationalFunctionQ& c) const {
  if (is_zero()) return {};
  std::vector<RationalFunctionQ> out(coeffs_.size());
  RationalFunctionQ f(1);
  const std::size_t d = coeffs_.size() - 1;
  for (std::size_t i = 0; i <= d; ++i) {
    out[d - i] = coeffs_[i] * f;
    f *= c;
  }
  return PolyT(std::move(out));
}

RationalFunctionQ PolyT::eval(const RationalFunctionQ& t0) const {
  RationalFunctionQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t0;
    acc += *it;
  }
  return acc;
}

PolyT PolyT::operator-() const {
  PolyT p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

PolyT& PolyT::operator+=(const PolyT& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyT& PolyT::operator-=(const PolyT& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyT& PolyT::operator*=(const RationalFunctionQ& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& a : coeffs_) a *= c;
  return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return (b * a.lead()).shifted(a.degree());
  if (b.is_monomial()) return (a * b.lead()).shifted(b.degree());
  std::vector<RationalFunctionQ> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PolyT(std::move(out));
}

std::string PolyT::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")";
    if (i == 1) out += "*t";
    if (i > 1) out += "*t^" + std::to_string(i);
  }
  return out;
}

std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial in t");
  if (a.degree() < b.degree()) return {PolyT(), a};
  std::vector<RationalFunctionQ> r = a.coeffs();
  const int db = b.degree();
  std::vector<RationalFunctionQ> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const RationalFunctionQ inv_lead = b.lead().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (r[static_cast<std::size_t>(i)].is_zero()) continue;
    RationalFunctionQ f = r[static_cast<std::size_t>(i)] * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {PolyT(std::move(quot)), PolyT(std::move(r))};
}

PolyT divexact(const PolyT& a, const PolyT& b) {
  if (b.is_monomial()) return (a * b.lead().inverse()).unshifted(b.degree());
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw InexactDivision("polynomial in t is not an exact multiple");
  return quot;
}

PolyT gcd(const PolyT& a, const PolyT& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return PolyT(RationalFunctionQ(1));
  const int low = std::min(a.low_degree(), b.low_degree());
  if (a.is_monomial() || b.is_monomial()) return PolyT::monomial(RationalFunctionQ(1), low);
  PolyT x = a.unshifted(a.low_degree()).monic();
  PolyT y = b.unshifted(b.low_degree()).monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return PolyT::monomial(RationalFunctionQ(1), low);
    PolyT r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.shifted(low);
}

// ---- BivariateElement -------------------------------------------------------

BivariateElement BivariateElement::make_monic(PolyT numer, PolyT denom) {
  if (numer.is_zero()) return {};
  if (!denom.lead().is_one()) {
    RationalFunctionQ s = denom.lead().inverse();
    numer *= s;
    denom *= s;
  }
  return {std::move(numer), std::move(denom), Canonical{}};
}

BivariateElement::BivariateElement(const RationalFunctionQ& c) : num_(c), den_(RationalFunctionQ(1)) {}

BivariateElement::BivariateElement(const PolyT& numer) : num_(numer), den_(RationalFunctionQ(1)) {}

BivariateElement::BivariateElement(const PolyT& numer, const PolyT& denom) {
  if (denom.is_zero()) throw DivisionByZero("bivariate element with zero denominator");
  if (numer.is_zero()) {
    den_ = PolyT(RationalFunctionQ(1));
    return;
  }
  PolyT g = gcd(numer, denom);
  if (g.is_one()) {
    *this = make_monic(numer, denom);
  } else {
    *this = make_monic(divexact(numer, g), divexact(denom, g));
  }
}

BivariateElement BivariateElement::t_power(int m) {
  if (m >= 0) return PolyT::monomial(RationalFunctionQ(1), m);
  return {PolyT(RationalFunctionQ(1)), PolyT::monomial(RationalFunctionQ(1), -m), Canonical{}};
}

BivariateElement BivariateElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero bivariate element");
  return make_monic(den_, num_);
}

BivariateElement BivariateElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{}};
}

RationalFunctionQ BivariateElement::specialize(int x0) const {
  const RationalFunctionQ t0 = RationalFunctionQ::q_power(x0);
  RationalFunctionQ d = den_.eval(t0);
  if (d.is_zero()) throw PoleAtPoint("denominator vanishes at t = q^" + std::to_string(x0));
  return num_.eval(t0) / d;
}

BivariateElement BivariateElement::scale_t(const RationalFunctionQ& c) const {
  return make_monic(num_.scale_variable(c), den_.scale_variable(c));
}

BivariateElement BivariateElement::reflect() const {
  // N(q/t)/D(q/t) = t^dD * Nrev / (t^dN * Drev).
  PolyT n = num_.reflected(RationalFunctionQ::q());
  PolyT d = den_.reflected(RationalFunctionQ::q());
  const int dn = num_.degree();
  const int dd = den_.degree();
  if (dd > dn) n = n.shifted(dd - dn);
  if (dn > dd) d = d.shifted(dn - dd);
  return {n, d};
}

std::map<int, RationalFunctionQ> BivariateElement::laurent_terms() const {
  if (!is_laurent()) throw NotIntegrable("denominator " + den_.to_string() + " is not a power of t");
  std::map<int, RationalFunctionQ> out;
  const int shift = den_.degree();
  for (int i = 0; i <= num_.degree(); ++i) {
    const auto& c = num_.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) out.emplace(i - shift, c);
  }
  return out;
}

BivariateElement BivariateElement::operator-() const { return {-num_, den_, Canonical{}}; }

BivariateElement& BivariateElement::operator+=(const BivariateElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    return *this = BivariateElement(num_ + o.num_, den_);
  }
  if (den_.is_one()) return *this = {num_ * o.den_ + o.num_, o.den_, Canonical{}};
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  PolyT g = gcd(den_, o.den_);
  if (g.is_one()) return *this = {num_ * o.den_ + o.num_ * den_, den_ * o.den_, Canonical{}};
  PolyT b1 = divexact(den_, g);
  PolyT d1 = divexact(o.den_, g);
  PolyT t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = BivariateElement();
  PolyT g2 = gcd(t, g);
  if (g2.is_one()) return *this = {std::move(t), b1 * o.den_, Canonical{}};
  return *this = make_monic(divexact(t, g2), b1 * divexact(o.den_, g2));
}

BivariateElement& BivariateElement::operator-=(const BivariateElement& o) { return *this += -o; }

BivariateElement& BivariateElement::operator*=(const BivariateElement& o) {
  if (is_zero() || o.is_zero()) return *this = BivariateElement();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  PolyT g1 = gcd(num_, o.den_);
  PolyT g2 = gcd(o.num_, den_);
  PolyT a = g1.is_one() ? num_ : divexact(num_, g1);
  PolyT c = g2.is_one() ? o.num_ : divexact(o.num_, g2);
  PolyT b = g2.is_one() ? den_ : divexact(den_, g2);
  PolyT d = g1.is_one() ? o.den_ : divexact(o.den_, g1);
  return *this = make_monic(a * c, b * d);
}

BivariateElement& BivariateElement::operator/=(const BivariateElement& o) { return *this *= o.inverse(); }

std::string BivariateElement::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
}

bool bivar_equal(const BivariateElement& a, const BivariateElement& b) { return (a - b).is_zero(); }

}  // namespace qcalc
