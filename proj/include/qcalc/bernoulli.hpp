#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qcalc/bivariate.hpp"

namespace qcalc {

/// Memo tables for Carlitz numbers and the order-k / inverse-order-k
/// numbers. Append-only and mutex guarded; results do not depend on fill order.
class BernoulliCache {
 public:
  BernoulliCache();

  /// beta_0 = 1 and q(q beta + 1)^n - beta_n = [n = 1], solved ascending in n.
  RationalFunctionQ beta(int n);
  /// beta^{(k)}_{n,q} at x = 0.
  RationalFunctionQ beta_order(int n, int k);
  /// beta^{(-order)}_{subscript,q}: (1-q)^{-s} sum_j (-1)^j C(s,j) [j+order]_q...[j+1]_q / ((j+order)...(j+1)).
  RationalFunctionQ beta_inverse_order(int subscript, int order);

 private:
  std::mutex mutex_;
  std::vector<RationalFunctionQ> betas_;
  std::map<std::pair<int, int>, RationalFunctionQ> order_cache_;
  std::map<std::pair<int, int>, RationalFunctionQ> inverse_cache_;
};

BernoulliCache& default_bernoulli_cache();

RationalFunctionQ beta(int n);

/// Value of the q-integral of q^{mx}: (m+1)/[m+1]_q. Throws LogarithmicMoment for m = -1.
RationalFunctionQ moment(int m);

/// Integral of a Laurent polynomial in t over Q(q), term by term through moment().
/// Throws NotIntegrable when the denominator is not a power of t and
/// LogarithmicMoment when a t^{-1} term is present.
RationalFunctionQ integrate_exact(const BivariateElement& f);

/// Integral of [x]_q^n through moments.
RationalFunctionQ beta_via_moments(int n);

/// beta^{(k)}_{n,q}(x) with the k-fold integral factored into single moments.
RationalFunctionQ beta_order(int n, int k);
BivariateElement beta_order_symbolic(int n, int k);

RationalFunctionQ beta_inverse_order(int subscript, int order);

/// The inverse-order number with the displayed overall sign (-1)^subscript in
/// place of (-1)^j (x = 0). Kept for auditing that sign.
RationalFunctionQ beta_inverse_order_signed_display(int subscript, int order);

/// C(k+n, n) [n]_q!/n! beta^{(-n)}_{k,q}.
RationalFunctionQ s2_from_inverse(int n, int k);

/// beta_n evaluated at a rational q0 by running the recurrence over Q.
Rational beta_at(int n, const Rational& q0);

}  // namespace qcalc
