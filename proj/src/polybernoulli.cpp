#include "mixzeta/polybernoulli.hpp"

#include "mixzeta/combinatorics.hpp"

#include <stdexcept>

namespace mixzeta {

namespace {

void require_nonnegative(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

// 1 - e^{-t} (minus_t) or e^t - 1 (plus_t).
TruncatedSeries exp_gap(ExpSign sign, int N) {
  if (sign == ExpSign::plus_t) {
    TruncatedSeries g = TruncatedSeries::exponential(1, N);
    g[0] -= 1;
    return g;
  }
  TruncatedSeries g = TruncatedSeries::exponential(-1, N) * Rational(-1);
  g[0] += 1;
  return g;
}

TruncatedSeries polylog_at_one_minus_exp(const SignedIndex& index, int m) {
  const int N = m + index.depth();
  return substitute_one_minus_exp(mpl_coeffs(index, N), ExpSign::minus_t, N);
}

}  // namespace

std::vector<Rational> mpl_coeffs(const SignedIndex& index, int M) {
  require_nonnegative(M, "series degree");
  const auto& k = index.entries();
  // f[m] = sum over chains ending at m of the weighted product; rebuilt once per depth.
  std::vector<Rational> f(static_cast<std::size_t>(M) + 1);
  std::vector<Rational> next(f.size());
  for (int m = 1; m <= M; ++m) f[static_cast<std::size_t>(m)] = pow(Rational(m), -k[0]);
  for (std::size_t d = 1; d < k.size(); ++d) {
    Rational prefix = 0;
    for (int m = 0; m <= M; ++m) {
      next[static_cast<std::size_t>(m)] = m == 0 ? Rational(0) : prefix * pow(Rational(m), -k[d]);
      prefix += f[static_cast<std::size_t>(m)];
    }
    std::swap(f, next);
  }
  return f;
}

TruncatedSeries substitute_one_minus_exp(const std::vector<Rational>& zcoeffs, ExpSign sign, int N) {
  require_nonnegative(N, "series order");
  if (static_cast<int>(zcoeffs.size()) < N + 1)
    throw std::invalid_argument("need " + std::to_string(N + 1) + " z-coefficients, got " +
                                std::to_string(zcoeffs.size()));
  TruncatedSeries z = exp_gap(sign, N);
  if (sign == ExpSign::plus_t) z *= Rational(-1);
  return z.compose_into(zcoeffs);
}

Rational poly_bernoulli_B(const SignedIndex& index, int m) {
  require_nonnegative(m, "poly-Bernoulli subscript");
  const int N = m + index.depth();
  const auto quotient = polylog_at_one_minus_exp(index, m) / exp_gap(ExpSign::minus_t, N);
  return quotient[m] * Rational(factorial(m));
}

Rational poly_bernoulli_C(const SignedIndex& index, int m) {
  require_nonnegative(m, "poly-Bernoulli subscript");
  const int N = m + index.depth();
  const auto quotient = polylog_at_one_minus_exp(index, m) / exp_gap(ExpSign::plus_t, N);
  return quotient[m] * Rational(factorial(m));
}

Rational kt_frakB_r2(int k1, int k2, int m) {
  require_nonnegative(k1, "lower index");
  require_nonnegative(k2, "lower index");
  require_nonnegative(m, "upper index");
  const int N = k1 + k2;
  const TruncatedSeries f = exp_gap(ExpSign::minus_t, N);
  const auto u = BiTruncatedSeries::from_linear(f, 1, 1, k1, k2);
  const auto v = BiTruncatedSeries::from_linear(f, 0, 1, k1, k2);

  Rational coeff = 0;
  auto u_power = BiTruncatedSeries::constant(1, k1, k2);
  for (int l1 = 1; l1 - 1 <= k1 + k2; ++l1) {
    auto v_power = BiTruncatedSeries::constant(1, k1, k2);
    for (int l2 = 1; l2 - 1 <= k2; ++l2) {
      const Rational weight = pow(Rational(l1 + l2), m) - pow(Rational(l1 + l2 - 1), m);
      if (weight != 0) coeff += weight * (u_power * v_power).at(k1, k2);
      v_power = v_power * v;
    }
    u_power = u_power * u;
  }
  return coeff * Rational(factorial(k1) * factorial(k2));
}

}  // namespace mixzeta
