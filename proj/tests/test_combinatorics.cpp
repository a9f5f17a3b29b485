#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixzeta/combinatorics.hpp"
#include "mixzeta/polynomial.hpp"
#include "mixzeta/rational.hpp"

#include <random>

using namespace mixzeta;

namespace {

// Brute-force Stirling numbers of the second kind by inclusion-exclusion.
Integer stirling2_oracle(int n, int k) {
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    Integer term = binomial(k, j);
    Integer p = 1;
    for (int e = 0; e < n; ++e) p *= (k - j);
    term *= p;
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum / factorial(k);
}

// Coefficients of the rising factorial x(x+1)...(x+n-1).
std::vector<Integer> rising_factorial_coeffs(int n) {
  std::vector<Integer> c{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next(c.size() + 1, 0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] += c[d] * i;
    }
    c = next;
  }
  return c;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(to_string(make_rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational(" 10/4 ") == make_rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow(Rational(0), 0) == Rational(1));
  CHECK(to_double(make_rational(1, 8)) == 0.125);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("stirling numbers against independent formulas") {
  for (int n = 0; n <= 14; ++n)
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_oracle(n, k));
  for (int n = 0; n <= 14; ++n) {
    const auto c = rising_factorial_coeffs(n);
    for (int k = 0; k <= n; ++k) CHECK(stirling1_unsigned(n, k) == c[static_cast<std::size_t>(k)]);
  }
  CHECK(stirling2(5, 6) == 0);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0, BernoulliConvention::minus) == 1);
  CHECK(bernoulli(1, BernoulliConvention::minus) == make_rational(-1, 2));
  CHECK(bernoulli(1, BernoulliConvention::plus) == make_rational(1, 2));
  CHECK(bernoulli(2, BernoulliConvention::plus) == make_rational(1, 6));
  CHECK(bernoulli(12, BernoulliConvention::minus) == make_rational(-691, 2730));
  CHECK(bernoulli(7, BernoulliConvention::minus) == 0);
  // sum_{j<n} C(n, j) B_j = 0 for n >= 2 (minus convention)
  for (int n = 2; n <= 25; ++n) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += Rational(binomial(n, j)) * bernoulli(j, BernoulliConvention::minus);
    CHECK(s == 0);
  }
  CHECK(zeta_nonpositive(0) == make_rational(-1, 2));
  CHECK(zeta_nonpositive(1) == make_rational(-1, 12));
  CHECK(zeta_nonpositive(2) == 0);
  CHECK(zeta_nonpositive(3) == make_rational(1, 120));
}

TEST_CASE("eulerian polynomials generate power sums") {
  CHECK(eulerian_poly(0) == BasisPolynomial({0, 1}));
  CHECK(eulerian_poly(2) == BasisPolynomial({0, 1, 1}));
  CHECK(eulerian_poly(3) == BasisPolynomial({0, 1, 4, 1}));
  // E_n(z) = (1-z)^{n+1} sum_m m^n z^m, compared coefficientwise
  for (int n = 0; n <= 9; ++n) {
    const int len = n + 3;
    std::vector<Rational> series(static_cast<std::size_t>(len), 0);
    for (int m = 1; m < len; ++m) series[static_cast<std::size_t>(m)] = pow(Rational(m), n);
    for (int f = 0; f <= n; ++f)
      for (int j = len - 1; j >= 1; --j) series[static_cast<std::size_t>(j)] -= series[static_cast<std::size_t>(j - 1)];
    const auto e = eulerian_poly(n);
    for (int j = 0; j < len; ++j) CHECK(e.coefficient(j) == series[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("basis change") {
  const auto z = BasisPolynomial({0, 1}).to_basis(Basis::one_minus_z);
  CHECK(z == BasisPolynomial({1, -1}, Basis::one_minus_z));
  CHECK(BasisPolynomial({1, 1}).to_basis(Basis::one_minus_z) == BasisPolynomial({2, -1}, Basis::one_minus_z));
  CHECK(BasisPolynomial({1, 4, 1}).to_basis(Basis::one_minus_z) ==
        BasisPolynomial({6, -6, 1}, Basis::one_minus_z));
  CHECK(BasisPolynomial({0, 0, 3}).divide_by_z_power(2) == BasisPolynomial({3}));
  CHECK_THROWS(BasisPolynomial({1, 1}).divide_by_z_power(1));
}

TEST_CASE("basis round trip on random polynomials") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9), deg(0, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int j = 0; j <= d; ++j) c.push_back(make_rational(num(rng), den(rng)));
    const BasisPolynomial p(c);
    const auto q = p.to_basis(Basis::one_minus_z);
    CHECK(q.to_basis(Basis::z) == p);
    const Rational x = make_rational(num(rng), den(rng));
    CHECK(q.evaluate(x) == p.evaluate(x));
  }
}
