#pragma once

// Exact truncated power series in one and two variables.

#include "mixzeta/rational.hpp"

#include <vector>

namespace mixzeta {

/// c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}), exact.
///
/// Binary operations truncate to the smaller of the two orders. Division by a
/// series of valuation v needs a numerator of valuation >= v and lowers the
/// result's order by v.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  TruncatedSeries(std::vector<Rational> coefficients, int order);

  /// exp(sign * t) through order N, sign = +1 or -1.
  static TruncatedSeries exponential(int sign, int order);
  /// t itself.
  static TruncatedSeries identity(int order);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  Rational& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }

  /// Index of the first nonzero coefficient, or order() + 1 for the zero series.
  int valuation() const;

  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  /// sum_m outer[m] * this^m; requires valuation() >= 1.
  TruncatedSeries compose_into(const std::vector<Rational>& outer) const;

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

/// Exact series in x1, x2 truncated at degrees (N1, N2) separately.
class BiTruncatedSeries {
 public:
  BiTruncatedSeries(int order1, int order2);

  /// Build from a univariate series in the linear form a*x1 + b*x2.
  static BiTruncatedSeries from_linear(const TruncatedSeries& f, int a, int b, int order1, int order2);
  static BiTruncatedSeries constant(const Rational& c, int order1, int order2);

  int order1() const { return order1_; }
  int order2() const { return order2_; }
  const Rational& at(int i, int j) const { return coeffs_[index(i, j)]; }
  Rational& at(int i, int j) { return coeffs_[index(i, j)]; }

  BiTruncatedSeries& operator+=(const BiTruncatedSeries& rhs);
  BiTruncatedSeries& operator*=(const Rational& scalar);
  friend BiTruncatedSeries operator*(const BiTruncatedSeries& a, const BiTruncatedSeries& b);

  bool is_zero() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order2_ + 1) + static_cast<std::size_t>(j);
  }
  void require_same_shape(const BiTruncatedSeries& other) const;

  int order1_;
  int order2_;
  std::vector<Rational> coeffs_;
};

}  // namespace mixzeta
