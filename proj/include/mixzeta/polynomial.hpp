#pragma once

#include "mixzeta/rational.hpp"

#include <iosfwd>
#include <vector>

namespace mixzeta {

/// Which power basis a polynomial's coefficients refer to.
enum class Basis { z, one_minus_z };

/// Exact polynomial c_0 + c_1 b + ... + c_d b^d where b is z or (1 - z).
///
/// Trailing zeros are trimmed on construction, so degree() is -1 exactly for
/// the zero polynomial. Arithmetic between two polynomials requires them to be
/// in the same basis (both bases are ordinary power bases in some variable, so
/// +, - and * are the usual coefficient operations).
class BasisPolynomial {
 public:
  BasisPolynomial() = default;
  explicit BasisPolynomial(std::vector<Rational> coefficients, Basis basis = Basis::z);

  static BasisPolynomial monomial(int degree, Rational coefficient = 1, Basis basis = Basis::z);

  Basis basis() const { return basis_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of b^j; zero outside [0, degree].
  Rational coefficient(int j) const;

  /// Same polynomial expressed in the other basis (z <-> 1 - z).
  BasisPolynomial to_basis(Basis target) const;

  /// Value at the point z (not at b), exact.
  Rational evaluate(const Rational& z) const;
  double evaluate(double z) const;

  /// p(z) / z^k; the division must be exact. Only defined in the z basis.
  BasisPolynomial divide_by_z_power(int k) const;

  BasisPolynomial& operator+=(const BasisPolynomial& rhs);
  BasisPolynomial& operator-=(const BasisPolynomial& rhs);
  BasisPolynomial& operator*=(const Rational& scalar);

  friend BasisPolynomial operator+(BasisPolynomial lhs, const BasisPolynomial& rhs) { return lhs += rhs; }
  friend BasisPolynomial operator-(BasisPolynomial lhs, const BasisPolynomial& rhs) { return lhs -= rhs; }
  friend BasisPolynomial operator*(BasisPolynomial lhs, const Rational& scalar) { return lhs *= scalar; }
  friend BasisPolynomial operator*(const Rational& scalar, BasisPolynomial rhs) { return rhs *= scalar; }
  friend BasisPolynomial operator*(const BasisPolynomial& lhs, const BasisPolynomial& rhs);

  friend bool operator==(const BasisPolynomial& lhs, const BasisPolynomial& rhs) {
    return lhs.basis_ == rhs.basis_ && lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void trim();
  void require_same_basis(const BasisPolynomial& other) const;

  std::vector<Rational> coeffs_;
  Basis basis_ = Basis::z;
};

/// Human-readable form, e.g. "1 + 4*z + z^2" or "6 - 6*(1-z) + (1-z)^2".
std::ostream& operator<<(std::ostream& os, const BasisPolynomial& p);

}  // namespace mixzeta
