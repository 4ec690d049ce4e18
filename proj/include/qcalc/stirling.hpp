#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qcalc/bivariate.hpp"

namespace qcalc {

/// S_1(n,k:q): z^k coefficients of prod_{j=1}^{n} (1 + [j]_q z).
std::vector<PolyQ> s1_gen(int n);

/// Taylor coefficients z^0..z^max_k of prod_{j=1}^{n} 1/(1 + [j]_q z).
std::vector<RationalFunctionQ> s2_gen(int n, int max_k);

/// S_2 through the finite q-difference of 0^n:
/// q^{-k(k-1)/2}/[k]_q! * sum_j (-1)^j q^{j(j-1)/2} binom(k,j)_q [k-j]_q^n.
/// Zero for k < 0.
RationalFunctionQ s2_explicit(int n, int k);

/// (1-q)^{-k} sum_{j=0}^{k} (-1)^{k-j} C(k+n, k-j) binom(j+n, j)_q. Zero for k < 0.
RationalFunctionQ s2_alt(int n, int k);

/// Coefficients of prod_{j=0}^{n-1} ([x]_q - [j]_q) in powers of [x]_q.
std::vector<PolyQ> s1_signed(int n);

/// Which first-kind convention an expression uses.
enum class FirstKind { generating, signed_product };

/// S_1(n,k) under the chosen convention; zero when n < 0 or k outside [0, n].
PolyQ s1_value(FirstKind kind, int n, int k);

/// ([x]_q^n, sum_k q^{k(k-1)/2} binom(x,k)_q [k]_q! s2_explicit(n,k)).
std::pair<BivariateElement, BivariateElement> power_to_falling(int n);

/// (t^n,
///  sum_k (q-1)^k q^{k(k-1)/2} binom(n,k)_q [x]_{k,q},
///  sum_m {sum_k (q-1)^k binom(n,k)_q S_1(k,m)} [x]_q^m) with generating S_1.
std::tuple<BivariateElement, BivariateElement, BivariateElement> qpow_expansion(int n);

enum class StirlingKind { first_gen, second_gen, second_explicit, second_alt, first_signed };

std::string to_string(StirlingKind kind);

struct StirlingTable {
  StirlingKind kind;
  int max_n = 0;
  std::map<std::pair<int, int>, RationalFunctionQ> entries;

  /// Entries of row n, k = 0..n.
  std::vector<RationalFunctionQ> row(int n) const;
};

StirlingTable make_stirling_table(StirlingKind kind, int max_n);

}  // namespace qcalc
