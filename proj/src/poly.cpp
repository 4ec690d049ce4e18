#include "qcalc/poly.hpp"

#include <algorithm>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

using IntPoly = std::vector<Integer>;

// Scales p by the lcm of its denominators; returns the integer coefficients and that lcm.
IntPoly to_integer(const std::vector<Rational>& p, Integer& scale) {
  scale = 1;
  for (const auto& c : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = scale / p[i].get_den();
    out[i] *= p[i].get_num();
  }
  return out;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Primitive part of the pseudo-remainder of a by b.
IntPoly prem_primitive(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  make_primitive(a);
  return a;
}

IntPoly integer_gcd(IntPoly a, IntPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return IntPoly{1};
    IntPoly r = prem_primitive(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string coefficient_prefix(const Rational& c, bool latex) {
  if (c == 1) return "";
  if (c == -1) return "-";
  if (c.get_den() == 1) return c.get_num().get_str();
  Rational a = abs(c);
  std::string body = latex ? "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}"
                           : "(" + a.get_str() + ")";
  return (sgn(c) < 0 ? "-" : "") + body;
}

std::string constant_string(const Rational& c, bool latex) {
  if (!latex || c.get_den() == 1) return c.get_str();
  Rational a = abs(c);
  return (sgn(c) < 0 ? "-" : "") + std::string("\\frac{") + a.get_num().get_str() + "}{" +
         a.get_den().get_str() + "}";
}

std::string render(const std::vector<Rational>& coeffs, char var, bool latex) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (sgn(c) == 0) continue;
    std::string term;
    if (i == 0) {
      term = constant_string(c, latex);
    } else {
      term = coefficient_prefix(c, latex) + var;
      if (i > 1) {
        term += latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
      }
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

}  // namespace

PolyQ::PolyQ(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  PolyQ p;
  if (sgn(c) == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

void PolyQ::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool PolyQ::is_monomial() const {
  if (coeffs_.empty()) return false;
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }) == 1;
}

int PolyQ::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  }
  return 0;
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

PolyQ PolyQ::monic() const {
  if (is_zero() || lead() == 1) return *this;
  Rational inv = 1 / lead();
  return *this * inv;
}

PolyQ PolyQ::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  PolyQ p;
  p.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

PolyQ PolyQ::unshifted(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (low_degree() < k) throw InexactDivision("polynomial not divisible by q^" + std::to_string(k));
  PolyQ p;
  p.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return p;
}

PolyQ PolyQ::pow(unsigned e) const {
  PolyQ result(1);
  PolyQ base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

PolyQ PolyQ::scale_variable(const Rational& c) const {
  PolyQ p = *this;
  Rational f = 1;
  for (auto& a : p.coeffs_) {
    a *= f;
    f *= c;
  }
  p.trim();
  return p;
}

PolyQ PolyQ::operator-() const {
  PolyQ p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) { return *this = *this * o; }

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  if (a.is_constant()) return b * a.coeffs_[0];
  if (b.is_constant()) return a * b.coeffs_[0];
  // Multiply over Z after clearing denominators.
  Integer sa, sb;
  IntPoly ia = to_integer(a.coeffs_, sa);
  IntPoly ib = to_integer(b.coeffs_, sb);
  IntPoly prod(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  Integer scale = sa * sb;
  std::vector<Rational> out(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out[i] = ratio(prod[i], scale);
  }
  return PolyQ(std::move(out));
}

std::string PolyQ::to_string(char var) const { return render(coeffs_, var, false); }
std::string PolyQ::to_latex(char var) const { return render(coeffs_, var, true); }

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv_lead = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = r[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    Rational f = top * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {PolyQ(std::move(quot)), PolyQ(std::move(r))};
}

PolyQ divexact(const PolyQ& a, const PolyQ& b) {
  if (b.is_constant() && !b.is_zero()) return a * (1 / b.coeffs()[0]);
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) {
    throw InexactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  }
  return quot;
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return PolyQ(1);
  // Common power of q first; it is the whole answer when either side is a monomial.
  const int low = std::min(a.low_degree(), b.low_degree());
  if (a.is_monomial() || b.is_monomial()) return PolyQ::monomial(1, low);
  PolyQ ra = a.unshifted(a.low_degree());
  PolyQ rb = b.unshifted(b.low_degree());
  if (ra == rb || ra == rb * (ra.lead() / rb.lead())) return ra.monic().shifted(low);
  Integer s;
  IntPoly g = integer_gcd(to_integer(ra.coeffs(), s), to_integer(rb.coeffs(), s));
  std::vector<Rational> out(g.begin(), g.end());
  return PolyQ(std::move(out)).monic().shifted(low);
}

PolyQ poly_arith(const PolyQ& a, const PolyQ& b, PolyOp kind) {
  switch (kind) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    case PolyOp::divexact: return divexact(a, b);
  }
  return {};
}

}  // namespace qcalc
