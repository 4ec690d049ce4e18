#include "qcalc/bernstein.hpp"

#include <string>

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

BivariateElement bernstein(int k, int n) {
  if (n < 0 || k < 0 || k > n) {
    throw IndexError("bernstein(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ") needs 0 <= k <= n");
  }
  BivariateElement c{RationalFunctionQ(Rational(binomial(n, k)))};
  return c * x_q().pow(k) * one_minus_x_q().pow(n - k);
}

BernsteinBasis bernstein_basis(int n) {
  BernsteinBasis basis{n, {}};
  for (int k = 0; k <= n; ++k) basis.elements.push_back(bernstein(k, n));
  return basis;
}

BivariateElement bernstein_operator(std::span<const RationalFunctionQ> samples, int n) {
  if (n < 0 || static_cast<int>(samples.size()) != n + 1) {
    throw ArityError("bernstein_operator of degree " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                     " samples, got " + std::to_string(samples.size()));
  }
  BivariateElement acc;
  for (int k = 0; k <= n; ++k) {
    const auto& f = samples[static_cast<std::size_t>(k)];
    if (f.is_zero()) continue;
    acc += BivariateElement(f) * bernstein(k, n);
  }
  return acc;
}

BivariateElement generating_coefficient(int k, int n) {
  if (k < 0 || n < 0) throw IndexError("generating_coefficient needs nonnegative indices");
  using Series = TruncatedSeries<BivariateElement>;
  const auto var = SeriesVariable::t_series;
  Series s_to_k = Series::polynomial(n, {BivariateElement(1)}, var).shifted(k);
  Series expo = Series::exponential(n, one_minus_x_q(), var);
  BivariateElement prefactor = x_q().pow(k) * BivariateElement(RationalFunctionQ(ratio(1, factorial(k))));
  Series f = (s_to_k * expo) * prefactor;
  return f[n] * BivariateElement(RationalFunctionQ(Rational(factorial(n))));
}

BivariateElement partition_lhs(int i, int n) {
  if (i < 1 || i > n) {
    throw IndexError("partition_lhs(i=" + std::to_string(i) + ", n=" + std::to_string(n) + ") needs 1 <= i <= n");
  }
  const Integer cni = binomial(n, i);
  BivariateElement sum;
  for (int k = i - 1; k <= n; ++k) {
    Rational w = ratio(binomial(k, i), cni);
    if (w == 0) continue;
    sum += BivariateElement(RationalFunctionQ(w)) * bernstein(k, n);
  }
  return sum / (x_q() + one_minus_x_q()).pow(n - i);
}

Rational eval_point(const BivariateElement& e, int x0, const Rational& q0) { return e.specialize(x0).eval(q0); }

}  // namespace qcalc
