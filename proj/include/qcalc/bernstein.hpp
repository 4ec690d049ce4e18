#pragma once

#include <span>
#include <vector>

#include "qcalc/bivariate.hpp"

namespace qcalc {

/// B_{k,n}(x,q) = C(n,k) [x]_q^k [1-x]_q^{n-k}. Throws IndexError unless 0 <= k <= n.
BivariateElement bernstein(int k, int n);

struct BernsteinBasis {
  int n = 0;
  std::vector<BivariateElement> elements;
};

BernsteinBasis bernstein_basis(int n);

/// sum_k f(k/n) B_{k,n}(x,q) for samples f(0/n..n/n).
BivariateElement bernstein_operator(std::span<const RationalFunctionQ> samples, int n);

/// n! [s^n] of s^k e^{[1-x]_q s} [x]_q^k / k!, computed with truncated series.
BivariateElement generating_coefficient(int k, int n);

/// (sum_{k=i-1}^{n} C(k,i)/C(n,i) B_{k,n}) / ([x]_q + [1-x]_q)^{n-i}, 1 <= i <= n.
BivariateElement partition_lhs(int i, int n);

/// Value at t = q0^{x0} after specializing t -> q^{x0}; throws PoleAtPoint.
Rational eval_point(const BivariateElement& e, int x0, const Rational& q0);

}  // namespace qcalc
