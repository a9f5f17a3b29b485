#pragma once

// Exact integer/rational building blocks: binomials, Bernoulli numbers,
// zeta at nonpositive integers, Stirling numbers and Eulerian polynomials.
//
// All functions are safe to call concurrently. The Bernoulli and Stirling
// tables are grown on demand under a lock and only ever appended to.

#include "mixzeta/polynomial.hpp"
#include "mixzeta/rational.hpp"

namespace mixzeta {

/// Sign convention for B_1: plus gives +1/2, minus gives -1/2. All other
/// Bernoulli numbers agree between the two.
enum class BernoulliConvention { plus, minus };

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// n! for n >= 0.
Integer factorial(long n);

/// B_j under the requested convention.
Rational bernoulli(int j, BernoulliConvention convention);

/// zeta(-m) for m >= 0: -1/2 at m = 0, -B_{m+1}/(m+1) otherwise.
Rational zeta_nonpositive(int m);

/// Unsigned Stirling numbers of the first kind, [n, k]; zero outside 0 <= k <= n.
Integer stirling1_unsigned(int n, int k);

/// Stirling numbers of the second kind, {n, k}; zero outside 0 <= k <= n.
Integer stirling2(int n, int k);

/// E_i(z) with Li_{-i}(z) = E_i(z) / (1 - z)^{i+1}, in the z basis.
///
/// For i >= 1 this is z times the classical Eulerian polynomial. E_0(z) = z,
/// which is what Li_0(z) = z / (1 - z) forces.
BasisPolynomial eulerian_poly(int i);

}  // namespace mixzeta
