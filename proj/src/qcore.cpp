#include "qcalc/qcore.hpp"

namespace qcalc {

namespace {

const PolyQ& one_minus_q() {
  static const PolyQ p(std::vector<Rational>{1, -1});
  return p;
}

}  // namespace

PolyQ q_int(int n) {
  if (n <= 0) return {};
  return PolyQ(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

RationalFunctionQ q_int_any(int n) {
  if (n >= 0) return q_int(n);
  return -(RationalFunctionQ::q_power(n) * RationalFunctionQ(q_int(-n)));
}

PolyQ q_factorial(int n) {
  PolyQ f(1);
  for (int j = 2; j <= n; ++j) f *= q_int(j);
  return f;
}

PolyQ gauss_binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  return divexact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

RationalFunctionQ q_pow_binom2(int k) {
  const long e = static_cast<long>(k) * (k - 1) / 2;
  return RationalFunctionQ::q_power(static_cast<int>(e));
}

BivariateElement x_minus_q(int j) {
  const RationalFunctionQ inv = RationalFunctionQ(1) / RationalFunctionQ(one_minus_q());
  return PolyT(std::vector<RationalFunctionQ>{inv, -(inv * RationalFunctionQ::q_power(-j))});
}

BivariateElement x_q() { return x_minus_q(0); }

BivariateElement one_minus_x_q() {
  // (1 - q/t)/(1-q) = (t - q) / (t (1-q))
  return x_q().reflect();
}

BivariateElement q_pow_x(int m) { return BivariateElement::t_power(m); }

BivariateElement q_falling(int k) {
  BivariateElement acc(1);
  for (int j = 0; j < k; ++j) acc *= x_minus_q(j);
  return acc;
}

BivariateElement q_binom_x(int k) {
  return q_falling(k) * BivariateElement(RationalFunctionQ(1) / RationalFunctionQ(q_factorial(k)));
}

RationalFunctionQ newton_reconstruct(std::span<const RationalFunctionQ> values, int x0) {
  const int n = static_cast<int>(values.size()) - 1;
  RationalFunctionQ acc;
  for (int m = 0; m <= n; ++m) {
    RationalFunctionQ coeff = q_binom_x(m).specialize(x0);
    if (coeff.is_zero()) continue;
    acc += coeff * q_difference(values, m);
  }
  return acc;
}

}  // namespace qcalc
