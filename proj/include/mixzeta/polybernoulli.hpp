#pragma once

// Multiple polylogarithm coefficients and poly-Bernoulli numbers.
//
//   Li_k(1 - e^{-t}) / (1 - e^{-t}) = sum_m B_m^{(k)} t^m / m!
//   Li_k(1 - e^{-t}) / (e^t - 1)    = sum_m C_m^{(k)} t^m / m!

#include "mixzeta/rational.hpp"
#include "mixzeta/series.hpp"
#include "mixzeta/signed_index.hpp"

#include <vector>

namespace mixzeta {

/// c_0..c_M with Li_k(z) = sum_m c_m z^m, where
/// Li_{k_1..k_r}(z) = sum_{0<m_1<...<m_r} z^{m_r} / (m_1^{k_1} ... m_r^{k_r}).
std::vector<Rational> mpl_coeffs(const SignedIndex& index, int M);

enum class ExpSign { minus_t, plus_t };

/// sum_m zcoeffs[m] z^m with z = 1 - e^{-t} (minus_t) or z = 1 - e^{t} (plus_t), to order N.
/// Throws std::invalid_argument when fewer than N+1 coefficients are given.
TruncatedSeries substitute_one_minus_exp(const std::vector<Rational>& zcoeffs, ExpSign sign, int N);

Rational poly_bernoulli_B(const SignedIndex& index, int m);
Rational poly_bernoulli_C(const SignedIndex& index, int m);

/// The depth-two number with negative upper index -m and lower indices (k1, k2).
Rational kt_frakB_r2(int k1, int k2, int m);

}  // namespace mixzeta
