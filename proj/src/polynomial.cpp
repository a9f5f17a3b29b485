#include "mixzeta/polynomial.hpp"

#include "mixzeta/combinatorics.hpp"

#include <ostream>
#include <stdexcept>

namespace mixzeta {

BasisPolynomial::BasisPolynomial(std::vector<Rational> coefficients, Basis basis)
    : coeffs_(std::move(coefficients)), basis_(basis) {
  trim();
}

BasisPolynomial BasisPolynomial::monomial(int degree, Rational coefficient, Basis basis) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coefficient);
  return BasisPolynomial(std::move(c), basis);
}

void BasisPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void BasisPolynomial::require_same_basis(const BasisPolynomial& other) const {
  if (basis_ != other.basis_ && !is_zero() && !other.is_zero())
    throw std::invalid_argument("polynomial arithmetic across different bases");
}

Rational BasisPolynomial::coefficient(int j) const {
  if (j < 0 || j > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(j)];
}

// Substituting b = 1 - b' is an involution, so one routine serves both directions:
// sum_i c_i (1 - b')^i = sum_j [ sum_{i>=j} c_i C(i,j) (-1)^j ] b'^j.
BasisPolynomial BasisPolynomial::to_basis(Basis target) const {
  if (target == basis_) return *this;
  const int d = degree();
  std::vector<Rational> out(coeffs_.size());
  for (int i = 0; i <= d; ++i) {
    const Rational& ci = coeffs_[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    for (int j = 0; j <= i; ++j) {
      Rational term = ci * Rational(binomial(i, j));
      if (j % 2 == 1) term = -term;
      out[static_cast<std::size_t>(j)] += term;
    }
  }
  return BasisPolynomial(std::move(out), target);
}

Rational BasisPolynomial::evaluate(const Rational& z) const {
  const Rational x = basis_ == Basis::z ? z : Rational(1 - z);
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double BasisPolynomial::evaluate(double z) const {
  const double x = basis_ == Basis::z ? z : 1.0 - z;
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

BasisPolynomial BasisPolynomial::divide_by_z_power(int k) const {
  if (basis_ != Basis::z) throw std::invalid_argument("division by z requires the z basis");
  if (k < 0) throw std::invalid_argument("negative power in divide_by_z_power");
  if (is_zero()) return *this;
  for (int j = 0; j < k; ++j)
    if (coefficient(j) != 0) throw std::domain_error("polynomial is not divisible by the requested power of z");
  return BasisPolynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()), basis_);
}

BasisPolynomial& BasisPolynomial::operator+=(const BasisPolynomial& rhs) {
  require_same_basis(rhs);
  if (is_zero()) basis_ = rhs.basis_;
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

BasisPolynomial& BasisPolynomial::operator-=(const BasisPolynomial& rhs) {
  require_same_basis(rhs);
  if (is_zero()) basis_ = rhs.basis_;
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

BasisPolynomial& BasisPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

BasisPolynomial operator*(const BasisPolynomial& lhs, const BasisPolynomial& rhs) {
  lhs.require_same_basis(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return BasisPolynomial({}, lhs.basis());
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return BasisPolynomial(std::move(out), lhs.basis());
}

std::ostream& operator<<(std::ostream& os, const BasisPolynomial& p) {
  if (p.is_zero()) return os << "0";
  const char* var = p.basis() == Basis::z ? "z" : "(1-z)";
  bool first = true;
  for (int j = 0; j <= p.degree(); ++j) {
    Rational c = p.coefficient(j);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << to_string(c);
      continue;
    }
    if (c != 1) os << to_string(c) << "*";
    os << var;
    if (j > 1) os << "^" << j;
  }
  return os;
}

}  // namespace mixzeta
