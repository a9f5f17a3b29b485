#pragma once

// Values at positive integers s = m + 1 from the coefficient expansions.

#include "mixzeta/numeric.hpp"
#include "mixzeta/rational.hpp"

#include <vector>

namespace mixzeta {

/// Weak compositions of m into `parts` nonnegative parts, first part descending.
std::vector<std::vector<int>> compositions(int m, int parts);

/// (1/m!) int_0^inf t^m e^{-c t} Li_p(1 - e^t) dt for p >= 0, c >= 1.
NumericValue block_integral(int p, int c, int m);

/// eta(k, -n; m+1), k > n.
NumericValue rhs_eta_pos_neg(int k, int n, int m);

/// eta(-n, k; m+1), both k > n+1 and k <= n.
NumericValue rhs_eta_neg_pos(int n, int k, int m);

enum class OnesExponent {
  /// (n-j+1)^{-(m+r-l+1)}
  corrected,
  /// (n-j+1)^{-(m+r-l)}
  as_printed,
};

/// eta({1}^{r-1}, -n; m+1), r > n+1, exactly.
Rational rhs_eta_ones_neg(int r, int n, int m, OnesExponent exponent = OnesExponent::corrected);

/// xi(-n, k; m+1), k > n+1.
NumericValue rhs_xi_neg_pos(int n, int k, int m);

enum class XitildeBase {
  /// shift n-l-j in the first sum
  statement,
  /// shift n-l-j+1 in the first sum
  proof,
};

/// xitilde(k, -n; m+1), k < n.
NumericValue rhs_xitilde_pos_neg(int k, int n, int m, XitildeBase base = XitildeBase::statement);

enum class DepthOneKind { xi, eta };

/// xi({1}^{r-1}, k; m+1) or eta({1}^{r-1}, k; m+1):
/// sum over compositions of m into k parts of C(a_k+r, r) Z(a_1+1, ..., a_{k-1}+1, a_k+r+1),
/// with Z = zeta for xi and (-1)^{r-1} zeta* for eta.
NumericValue depth_one_family(DepthOneKind kind, int r, int k, int m);

}  // namespace mixzeta
