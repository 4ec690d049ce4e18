#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qcalc/errors.hpp"

namespace qcalc {

enum class SeriesVariable { z, t_series };

/// Power series cut at an explicit order: coefficients 0..order are exact,
/// everything above is unknown. Binary operations keep the smaller order.
/// Coeff needs ring operations, construction from long, and an is_zero overload.
template <class Coeff>
class TruncatedSeries {
 public:
  TruncatedSeries(int order, SeriesVariable var = SeriesVariable::z)
      : order_(order), var_(var), coeffs_(static_cast<std::size_t>(order) + 1, Coeff(0)) {}

  TruncatedSeries(int order, std::vector<Coeff> coeffs, SeriesVariable var = SeriesVariable::z)
      : order_(order), var_(var), coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Coeff(0));
  }

  /// 1 + a*z (or any polynomial given by its coefficients) truncated at order.
  static TruncatedSeries polynomial(int order, const std::vector<Coeff>& coeffs,
                                    SeriesVariable var = SeriesVariable::z) {
    std::vector<Coeff> c(coeffs.begin(), coeffs.begin() + std::min<std::ptrdiff_t>(coeffs.size(), order + 1));
    return TruncatedSeries(order, std::move(c), var);
  }

  /// exp(a*s) = sum a^k s^k / k!.
  static TruncatedSeries exponential(int order, const Coeff& a, SeriesVariable var = SeriesVariable::t_series) {
    TruncatedSeries s(order, var);
    Coeff term(1);
    for (int k = 0; k <= order; ++k) {
      s.coeffs_[static_cast<std::size_t>(k)] = term;
      term = term * a / Coeff(k + 1);
    }
    return s;
  }

  int order() const { return order_; }
  SeriesVariable variable() const { return var_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  /// Multiplies by s^k, keeping the order.
  TruncatedSeries shifted(int k) const {
    TruncatedSeries s(order_, var_);
    for (int i = 0; i + k <= order_; ++i) s.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    TruncatedSeries s(std::min(order_, o.order_), var_);
    for (int i = 0; i <= s.order_; ++i) s.coeffs_[static_cast<std::size_t>(i)] = (*this)[i] + o[i];
    return s;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const {
    TruncatedSeries s(std::min(order_, o.order_), var_);
    for (int i = 0; i <= s.order_; ++i) s.coeffs_[static_cast<std::size_t>(i)] = (*this)[i] - o[i];
    return s;
  }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    TruncatedSeries s(std::min(order_, o.order_), var_);
    for (int i = 0; i <= s.order_; ++i) {
      if (is_zero((*this)[i])) continue;
      for (int j = 0; i + j <= s.order_; ++j) {
        if (is_zero(o[j])) continue;
        s.coeffs_[static_cast<std::size_t>(i + j)] += (*this)[i] * o[j];
      }
    }
    return s;
  }

  TruncatedSeries operator*(const Coeff& c) const {
    TruncatedSeries s = *this;
    for (auto& a : s.coeffs_) a = a * c;
    return s;
  }

  /// Reciprocal through the same order; throws NonInvertibleSeries when the
  /// constant term is zero.
  TruncatedSeries inverse() const {
    if (is_zero(coeffs_[0])) throw NonInvertibleSeries("constant term is zero");
    TruncatedSeries s(order_, var_);
    const Coeff inv0 = Coeff(1) / coeffs_[0];
    s.coeffs_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
      Coeff acc(0);
      for (int k = 1; k <= n; ++k) {
        if (is_zero(coeffs_[static_cast<std::size_t>(k)])) continue;
        acc += coeffs_[static_cast<std::size_t>(k)] * s.coeffs_[static_cast<std::size_t>(n - k)];
      }
      s.coeffs_[static_cast<std::size_t>(n)] = -(acc * inv0);
    }
    return s;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_;
  SeriesVariable var_;
  std::vector<Coeff> coeffs_;
};

enum class SeriesOp { mul, invert };

template <class Coeff>
TruncatedSeries<Coeff> series_mul_inv(const TruncatedSeries<Coeff>& a, SeriesOp kind,
                                      const TruncatedSeries<Coeff>* b = nullptr) {
  if (kind == SeriesOp::invert) return a.inverse();
  if (b == nullptr) throw ArityError("series multiplication needs two operands");
  return a * *b;
}

}  // namespace qcalc
