#include "qcalc/bernoulli.hpp"

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"

namespace qcalc {

namespace {

RationalFunctionQ one_minus_q_pow(int e) {
  return RationalFunctionQ(PolyQ(std::vector<Rational>{1, -1})).pow(e);
}

// prod_{i=1}^{order} [j+i]_q / (j+i)
RationalFunctionQ q_ratio_product(int j, int order) {
  PolyQ num(1);
  Integer den = 1;
  for (int i = 1; i <= order; ++i) {
    num *= q_int(j + i);
    den *= j + i;
  }
  return RationalFunctionQ(num * ratio(1, den));
}

RationalFunctionQ compute_beta_order(int n, int k, BivariateElement* symbolic) {
  RationalFunctionQ sum;
  BivariateElement sym;
  for (int i = 0; i <= n; ++i) {
    RationalFunctionQ term(Rational(binomial(n, i)));
    if (i % 2 == 1) term = -term;
    for (int l = 1; l <= k; ++l) term *= moment(k - l + i);
    sum += term;
    if (symbolic) sym += q_pow_x(i) * BivariateElement(term);
  }
  RationalFunctionQ scale = one_minus_q_pow(-n);
  if (symbolic) *symbolic = sym * BivariateElement(scale);
  return sum * scale;
}

}  // namespace

BernoulliCache::BernoulliCache() : betas_{RationalFunctionQ(1)} {}

RationalFunctionQ BernoulliCache::beta(int n) {
  if (n < 0) throw IndexError("beta index must be nonnegative, got " + std::to_string(n));
  std::lock_guard lock(mutex_);
  const RationalFunctionQ q = RationalFunctionQ::q();
  while (static_cast<int>(betas_.size()) <= n) {
    const int m = static_cast<int>(betas_.size());
    RationalFunctionQ acc;
    for (int j = 0; j < m; ++j) {
      acc += RationalFunctionQ::q_power(j) * RationalFunctionQ(Rational(binomial(m, j))) * betas_[static_cast<std::size_t>(j)];
    }
    RationalFunctionQ rhs = RationalFunctionQ(m == 1 ? 1 : 0) - q * acc;
    RationalFunctionQ pivot = RationalFunctionQ::q_power(m + 1) - RationalFunctionQ(1);
    betas_.push_back(rhs / pivot);
  }
  return betas_[static_cast<std::size_t>(n)];
}

RationalFunctionQ BernoulliCache::beta_order(int n, int k) {
  {
    std::lock_guard lock(mutex_);
    auto it = order_cache_.find({n, k});
    if (it != order_cache_.end()) return it->second;
  }
  RationalFunctionQ value = compute_beta_order(n, k, nullptr);
  std::lock_guard lock(mutex_);
  return order_cache_.emplace(std::make_pair(n, k), value).first->second;
}

RationalFunctionQ BernoulliCache::beta_inverse_order(int subscript, int order) {
  {
    std::lock_guard lock(mutex_);
    auto it = inverse_cache_.find({subscript, order});
    if (it != inverse_cache_.end()) return it->second;
  }
  RationalFunctionQ sum;
  for (int j = 0; j <= subscript; ++j) {
    RationalFunctionQ term = q_ratio_product(j, order) * RationalFunctionQ(Rational(binomial(subscript, j)));
    sum += (j % 2 == 1) ? -term : term;
  }
  RationalFunctionQ value = sum * one_minus_q_pow(-subscript);
  std::lock_guard lock(mutex_);
  return inverse_cache_.emplace(std::make_pair(subscript, order), value).first->second;
}

BernoulliCache& default_bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

RationalFunctionQ beta(int n) { return default_bernoulli_cache().beta(n); }

RationalFunctionQ moment(int m) {
  if (m == -1) throw LogarithmicMoment("integral of q^{-x} is outside the Laurent-polynomial calculus");
  return RationalFunctionQ(m + 1) / q_int_any(m + 1);
}

RationalFunctionQ integrate_exact(const BivariateElement& f) {
  RationalFunctionQ acc;
  for (const auto& [m, c] : f.laurent_terms()) {
    if (m == -1) throw LogarithmicMoment("integrand has a t^{-1} term: " + c.to_string());
    acc += c * moment(m);
  }
  return acc;
}

RationalFunctionQ beta_via_moments(int n) { return integrate_exact(x_q().pow(n)); }

RationalFunctionQ beta_order(int n, int k) { return default_bernoulli_cache().beta_order(n, k); }

BivariateElement beta_order_symbolic(int n, int k) {
  BivariateElement out;
  compute_beta_order(n, k, &out);
  return out;
}

RationalFunctionQ beta_inverse_order(int subscript, int order) {
  return default_bernoulli_cache().beta_inverse_order(subscript, order);
}

RationalFunctionQ beta_inverse_order_signed_display(int subscript, int order) {
  RationalFunctionQ sum;
  for (int i = 0; i <= subscript; ++i) {
    sum += q_ratio_product(i, order) * RationalFunctionQ(Rational(binomial(subscript, i)));
  }
  if (subscript % 2 == 1) sum = -sum;
  return sum * one_minus_q_pow(-subscript);
}

RationalFunctionQ s2_from_inverse(int n, int k) {
  RationalFunctionQ scale(q_factorial(n) * ratio(binomial(k + n, n), factorial(n)));
  return scale * beta_inverse_order(k, n);
}

Rational beta_at(int n, const Rational& q0) {
  if (q0 == 1 || q0 == -1) return beta(n).eval(q0);
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    Rational qj = 1;
    for (int j = 0; j < m; ++j) {
      acc += Rational(binomial(m, j)) * qj * b[static_cast<std::size_t>(j)];
      qj *= q0;
    }
    Rational pivot = qj * q0 - 1;  // q0^{m+1} - 1
    b.push_back((Rational(m == 1 ? 1 : 0) - q0 * acc) / pivot);
  }
  return b[static_cast<std::size_t>(n)];
}

}  // namespace qcalc
