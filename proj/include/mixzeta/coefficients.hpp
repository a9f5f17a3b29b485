#pragma once

// Exact coefficient families of the mixed-index polylogarithm expansions.
//
//   Li_{k,-n}(z)      = z { sum_i P_i(z) Li_{k-n+1+i}(z) / (1-z)^{i+2} + Li_{k-n}(z) / (1-z) }   (k >= n)
//   Li_{k,-n}(z)      = same shape with P'_i, rows i in {n-k-1, ..., n-1}                        (k <  n)
//   Li_{-n,k}(z)      = sum_l D_l Li_{k-l}(z)
//   Li_{1^{r-1},-n}(z)= z / (1-z)^{n+1} sum_i Q_i(z) Li_{1^{r-i}}(z)                             (r > n+1)
//
// A, A' and E are the coefficients of P, P' and Q in powers of (1 - z).
// Each family has a closed form and a change-of-basis route; the rebase route
// is the one stored in the cached tables.

#include "mixzeta/polynomial.hpp"
#include "mixzeta/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>

namespace mixzeta {

enum class Family { P, A, D, Q, E, Pprime, Aprime };
enum class CoefficientRoute { closed_form, rebase };

std::string to_string(Family family);
/// Accepts the CLI spellings P, A, D, Q, E, Pprime, Aprime.
Family parse_family(const std::string& name);

/// Raised when a coefficient index lies outside the family's summation range.
class IndexRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A z-basis polynomial rewritten as sum_j c_j (1 - z)^j.
BasisPolynomial rebase_to_one_minus_z(const BasisPolynomial& p);

/// P^{(n)}_i(z) = C(n, i+1) E_{i+1}(z) / z, 0 <= i <= n-1.
BasisPolynomial p_poly(int n, int i);
/// The same polynomial from its explicit double sum.
BasisPolynomial p_poly_double_sum(int n, int i);

/// D^{(n)}_l, 0 <= l <= n+1: the coefficients of the Faulhaber polynomial
/// sum_{m1=1}^{m2-1} m1^n = sum_l D_l m2^l.
Rational d_coeff(int n, int l);

/// A^{(n)}_{l,j}, 0 <= l <= n-1, 0 <= j <= n-l-1.
Rational a_coeff(int n, int l, int j, CoefficientRoute route = CoefficientRoute::rebase);

/// Q^{(n)}_i(z), 1 <= i <= n+1, from its Stirling double sum.
BasisPolynomial q_poly(int n, int i);
/// Q^{(n)}_i(z) = sum_k z^{k-1} (1-z)^{n-k+1} {n+1, k} [k, i].
BasisPolynomial q_poly_product_form(int n, int i);

/// E^{(n)}_{l,j}, 1 <= l <= n+1, 0 <= j <= n.
Rational e_coeff(int n, int l, int j, CoefficientRoute route = CoefficientRoute::rebase);

/// P'^{(n)}_i(z) for k < n. Only the rows used by the k < n expansion exist:
/// i = n-m-1 (0 <= m <= k-1) gives C(n, m) E_{n-m}(z) / z, and i = n-k-1 gives
/// sum_{j=k}^{n} C(n, j) E_{n-j}(z) E_{j-k}(z) / z^2.
BasisPolynomial pprime_poly(int n, int k, int i);

/// A'^{(n)}_{l,j}: coefficient j of P'_{n-l-1} in powers of (1 - z),
/// 0 <= l <= k, 0 <= j <= n-l-1. Integer valued.
Rational aprime_coeff(int n, int k, int l, int j);

/// A cached, immutable table of one family for fixed (n[, k]).
///
/// Rows/columns: P, Q, Pprime rows are the polynomial index i with columns the
/// z-power; A, E, Aprime rows are l with columns j; D has the single row 0
/// with columns l.
struct CoefficientTable {
  Family family;
  int n = 0;
  int k = 0;  // only meaningful for Pprime / Aprime
  std::map<std::pair<int, int>, Rational> entries;

  Rational at(int row, int col) const;
  int max_row() const;
};

/// Build (or fetch from the cache) a coefficient table.
std::shared_ptr<const CoefficientTable> coefficient_table(Family family, int n, int k = 0);

}  // namespace mixzeta
