#include "mixzeta/series.hpp"

#include "mixzeta/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixzeta {

TruncatedSeries::TruncatedSeries(int order) : TruncatedSeries(std::vector<Rational>{}, order) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int order)
    : coeffs_(std::move(coefficients)), order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::exponential(int sign, int order) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("exponential sign must be +1 or -1");
  TruncatedSeries e(order);
  Rational term = 1;
  for (int j = 0; j <= order; ++j) {
    e[j] = term;
    term = term * Rational(sign) / Rational(j + 1);
  }
  return e;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries t(order);
  if (order >= 1) t[1] = 1;
  return t;
}

int TruncatedSeries::valuation() const {
  for (int j = 0; j <= order_; ++j)
    if (coeffs_[static_cast<std::size_t>(j)] != 0) return j;
  return order_ + 1;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot raise the order of a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  for (int j = 0; j <= order_; ++j) coeffs_[static_cast<std::size_t>(j)] += rhs[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  for (int j = 0; j <= order_; ++j) coeffs_[static_cast<std::size_t>(j)] -= rhs[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int v = b.valuation();
  if (v > b.order()) throw std::domain_error("series division by zero");
  if (a.valuation() < v)
    throw std::domain_error("series division: numerator valuation is below the divisor valuation");
  const int order = std::min(a.order(), b.order()) - v;
  if (order < 0) throw std::domain_error("series division leaves no significant coefficients");

  // Shift both by t^v, then long-divide by the unit part.
  std::vector<Rational> num(static_cast<std::size_t>(order) + 1), den(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    num[static_cast<std::size_t>(j)] = a[j + v];
    den[static_cast<std::size_t>(j)] = b[j + v];
  }
  const Rational lead_inv = 1 / den[0];
  TruncatedSeries q(order);
  for (int j = 0; j <= order; ++j) {
    Rational acc = num[static_cast<std::size_t>(j)];
    for (int i = 1; i <= j; ++i) acc -= den[static_cast<std::size_t>(i)] * q[j - i];
    q[j] = acc * lead_inv;
  }
  return q;
}

TruncatedSeries TruncatedSeries::compose_into(const std::vector<Rational>& outer) const {
  if (valuation() < 1) throw std::domain_error("composition needs an inner series without constant term");
  TruncatedSeries out(order_);
  TruncatedSeries power(order_);
  power[0] = 1;
  const int terms = std::min<int>(static_cast<int>(outer.size()) - 1, order_);
  for (int m = 0; m <= terms; ++m) {
    if (m > 0) power = power * (*this);
    const Rational& c = outer[static_cast<std::size_t>(m)];
    if (c == 0) continue;
    for (int j = 0; j <= order_; ++j) out[j] += c * power[j];
  }
  return out;
}

BiTruncatedSeries::BiTruncatedSeries(int order1, int order2)
    : order1_(order1), order2_(order2),
      coeffs_(static_cast<std::size_t>(order1 + 1) * static_cast<std::size_t>(order2 + 1)) {
  if (order1 < 0 || order2 < 0) throw std::invalid_argument("series orders must be nonnegative");
}

BiTruncatedSeries BiTruncatedSeries::constant(const Rational& c, int order1, int order2) {
  BiTruncatedSeries s(order1, order2);
  s.at(0, 0) = c;
  return s;
}

// f(a x1 + b x2) = sum_d f_d sum_i C(d, i) a^i b^{d-i} x1^i x2^{d-i}
BiTruncatedSeries BiTruncatedSeries::from_linear(const TruncatedSeries& f, int a, int b, int order1, int order2) {
  if (f.order() < order1 + order2) throw std::invalid_argument("univariate series too short for the bivariate order");
  BiTruncatedSeries out(order1, order2);
  for (int d = 0; d <= order1 + order2; ++d) {
    if (f[d] == 0) continue;
    for (int i = std::max(0, d - order2); i <= std::min(d, order1); ++i) {
      Rational coeff = f[d] * Rational(binomial(d, i)) * pow(Rational(a), i) * pow(Rational(b), d - i);
      out.at(i, d - i) += coeff;
    }
  }
  return out;
}

void BiTruncatedSeries::require_same_shape(const BiTruncatedSeries& other) const {
  if (order1_ != other.order1_ || order2_ != other.order2_)
    throw std::invalid_argument("bivariate series orders differ");
}

BiTruncatedSeries& BiTruncatedSeries::operator+=(const BiTruncatedSeries& rhs) {
  require_same_shape(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

BiTruncatedSeries& BiTruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

BiTruncatedSeries operator*(const BiTruncatedSeries& a, const BiTruncatedSeries& b) {
  a.require_same_shape(b);
  BiTruncatedSeries out(a.order1_, a.order2_);
  for (int i1 = 0; i1 <= a.order1_; ++i1)
    for (int j1 = 0; j1 <= a.order2_; ++j1) {
      const Rational& x = a.at(i1, j1);
      if (x == 0) continue;
      for (int i2 = 0; i1 + i2 <= a.order1_; ++i2)
        for (int j2 = 0; j1 + j2 <= a.order2_; ++j2) out.at(i1 + i2, j1 + j2) += x * b.at(i2, j2);
    }
  return out;
}

bool BiTruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

}  // namespace mixzeta
