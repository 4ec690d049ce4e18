#pragma once

#include <random>
#include <vector>

#include "qcalc/bivariate.hpp"

namespace qcalc::testing {

inline PolyQ P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return PolyQ(std::move(c));
}

inline RationalFunctionQ R(const PolyQ& n, const PolyQ& d = PolyQ(1)) { return RationalFunctionQ(n, d); }

// Small random polynomial with coefficients in [-3, 3] over a 3-element denominator pool.
inline PolyQ random_poly(std::mt19937& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-3, 3), den(1, 3);
  std::vector<Rational> c;
  for (int i = deg(rng); i >= 0; --i) c.push_back(ratio(num(rng), den(rng)));
  return PolyQ(std::move(c));
}

inline RationalFunctionQ random_ratfun(std::mt19937& rng) {
  PolyQ d;
  while (d.is_zero()) d = random_poly(rng, 2);
  return RationalFunctionQ(random_poly(rng), d);
}

inline BivariateElement random_bivariate(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2);
  auto poly_t = [&] {
    std::vector<RationalFunctionQ> c;
    for (int i = deg(rng); i >= 0; --i) c.push_back(random_ratfun(rng));
    return PolyT(std::move(c));
  };
  PolyT d;
  while (d.is_zero()) d = poly_t();
  return BivariateElement(poly_t(), d);
}

}  // namespace qcalc::testing
