#pragma once

// Floating-point special functions with absolute error estimates.

#include "mixzeta/rational.hpp"

#include <iosfwd>
#include <vector>

namespace mixzeta {

/// A value together with an estimated bound on its absolute error.
struct NumericValue {
  double value = 0.0;
  double abs_error = 0.0;

  NumericValue& operator+=(const NumericValue& rhs);
  NumericValue& operator-=(const NumericValue& rhs);
  friend NumericValue operator+(NumericValue a, const NumericValue& b) { return a += b; }
  friend NumericValue operator-(NumericValue a, const NumericValue& b) { return a -= b; }
  friend NumericValue operator*(const NumericValue& a, const NumericValue& b);
  friend NumericValue operator*(const NumericValue& a, double s);
  friend NumericValue operator*(double s, const NumericValue& a) { return a * s; }

  /// |a - b| <= a.abs_error + b.abs_error + slack.
  bool agrees_with(const NumericValue& other, double slack = 0.0) const;
};

std::ostream& operator<<(std::ostream& os, const NumericValue& v);

NumericValue gamma_real(double x);
NumericValue zeta_num(double s);
NumericValue hurwitz_num(double s, double alpha);

/// Li_k(x) for x < 1.
NumericValue polylog_num(int k, double x);
/// Li_k(1 - e^{t}) for t >= 0, without forming the large argument.
NumericValue polylog_one_minus_exp_plus(int k, double t);
/// Li_k(1 - e^{-t}) for t > 0.
NumericValue polylog_one_minus_exp_minus(int k, double t);

enum class ZetaRoute {
  /// Iterated integrals split at 1/2.
  holder,
  /// Truncated nested sums with an asymptotic tail.
  nested,
};

struct ZetaOptions {
  ZetaRoute route = ZetaRoute::holder;
  double tol = 1e-9;
  /// Summation cutoff of the nested route.
  long cutoff = 100000;
};

/// zeta(p_1, ..., p_n) = sum_{0 < m_1 < ... < m_n} prod m_i^{-p_i}, p_n >= 2.
NumericValue mzv_num(const std::vector<int>& p, const ZetaOptions& options = {});
/// zeta*(p_1, ..., p_n) = sum_{0 < m_1 <= ... <= m_n} prod m_i^{-p_i}, p_n >= 2.
NumericValue mzsv_num(const std::vector<int>& p, const ZetaOptions& options = {});

struct HurwitzStarArgs {
  std::vector<int> exponents;
  std::vector<Rational> shifts;

  /// All shifts equal to c.
  static HurwitzStarArgs uniform(std::vector<int> exponents, const Rational& c);
};

/// sum_{0 <= m_1 <= ... <= m_n} prod (m_i + alpha_i)^{-p_i}; the empty tuple gives 1.
/// Equal integer shifts use the holder route unless options say otherwise.
NumericValue mhzsv_num(const HurwitzStarArgs& args, const ZetaOptions& options = {});

}  // namespace mixzeta
