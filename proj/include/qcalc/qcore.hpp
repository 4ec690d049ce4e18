#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcalc/bivariate.hpp"
#include "qcalc/errors.hpp"

namespace qcalc {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
PolyQ q_int(int n);
/// [n]_q = (1-q^n)/(1-q) for any integer n (negative n gives -q^n [-n]_q).
RationalFunctionQ q_int_any(int n);
/// [n]_q! with [0]_q! = 1.
PolyQ q_factorial(int n);
/// Gaussian binomial by exact division of q-factorials; 0 outside 0 <= k <= n.
PolyQ gauss_binom(int n, int k);

/// q^{k(k-1)/2} as an element of Q(q) (k may be negative).
RationalFunctionQ q_pow_binom2(int k);

/// [x]_q = (1-t)/(1-q).
BivariateElement x_q();
/// [x-j]_q = (1 - t q^{-j})/(1-q); shifts act through t -> t/q.
BivariateElement x_minus_q(int j);
/// [1-x]_q = (t-q)/(t(1-q)).
BivariateElement one_minus_x_q();
/// q^{mx} = t^m.
BivariateElement q_pow_x(int m);
/// [x]_{k,q} = prod_{j<k} (1 - t q^{-j})/(1-q).
BivariateElement q_falling(int k);
/// binom(x, k)_q = [x]_{k,q} / [k]_q!.
BivariateElement q_binom_x(int k);

/// Delta_q^n f(0) = sum_k binom(n,k)_q (-1)^k q^{k(k-1)/2} f(n-k) over samples f(0..n).
template <class Value>
Value q_difference(std::span<const Value> values, int n) {
  if (n < 0 || static_cast<int>(values.size()) < n + 1) {
    throw ArityError("q_difference of order " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                     " samples, got " + std::to_string(values.size()));
  }
  Value acc(0);
  for (int k = 0; k <= n; ++k) {
    RationalFunctionQ c = q_pow_binom2(k) * RationalFunctionQ(gauss_binom(n, k));
    if (k % 2 == 1) c = -c;
    acc += values[static_cast<std::size_t>(n - k)] * c;
  }
  return acc;
}

/// Newton series sum_{m<=n} binom(x0, m)_q Delta_q^m f(0), with binom(x0, m)_q
/// obtained from q_binom_x(m) by t -> q^{x0}. n = values.size() - 1.
RationalFunctionQ newton_reconstruct(std::span<const RationalFunctionQ> values, int x0);

}  // namespace qcalc
