#include "mixzeta/theorems.hpp"

#include "mixzeta/coefficients.hpp"
#include "mixzeta/combinatorics.hpp"
#include "mixzeta/polybernoulli.hpp"

#include <cmath>
#include <stdexcept>

namespace mixzeta {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::domain_error(message);
}

void collect(int m, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(m);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = m; a >= 0; --a) {
    prefix.push_back(a);
    collect(m - a, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

NumericValue exact(const Rational& q) { return {to_double(q), 0.0}; }

}  // namespace

std::vector<std::vector<int>> compositions(int m, int parts) {
  if (m < 0 || parts < 1) throw std::invalid_argument("compositions need m >= 0 and parts >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect(m, parts, prefix, out);
  return out;
}

// p >= 2: -sum (a_p+1) c^{-(a_1+1)} zeta*(a_2+1, ..., a_{p-1}+1, a_p+2; {c}^{p-1})
NumericValue block_integral(int p, int c, int m) {
  require(p >= 0 && c >= 1 && m >= 0, "block integral needs p >= 0, c >= 1, m >= 0");
  if (p == 0) return exact(pow(Rational(c + 1), -(m + 1)) - pow(Rational(c), -(m + 1)));
  if (p == 1) return exact(-Rational(m + 1) * pow(Rational(c), -(m + 2)));
  NumericValue total;
  for (const auto& a : compositions(m, p)) {
    std::vector<int> exps(a.begin() + 1, a.end());
    for (auto& e : exps) e += 1;
    exps.back() += 1;
    const NumericValue star = mhzsv_num(HurwitzStarArgs::uniform(exps, Rational(c)));
    const double weight = (a.back() + 1) * std::pow(static_cast<double>(c), -(a.front() + 1));
    total -= star * weight;
  }
  return total;
}

NumericValue rhs_eta_pos_neg(int k, int n, int m) {
  require(n >= 0 && k > n, "η(k,-n;m+1) theorem requires k > n >= 0");
  require(m >= 0, "m must be nonnegative");
  NumericValue total = block_integral(k - n, 1, m);
  if (n == 0) return total;
  const auto table = coefficient_table(Family::A, n);
  for (int l = 0; l <= n - 1; ++l)
    for (int j = 0; j <= n - l - 1; ++j) {
      const Rational a = table->at(l, j);
      if (a != 0) total += block_integral(k - l, n - l - j + 1, m) * to_double(a);
    }
  return total;
}

NumericValue rhs_eta_neg_pos(int n, int k, int m) {
  require(n >= 0 && k >= 1 && m >= 0, "η(-n,k;m+1) theorem requires n >= 0, k >= 1, m >= 0");
  NumericValue total;
  const SignedIndex upper({m + 1});
  for (int l = 0; l <= n + 1; ++l) {
    const Rational dl = d_coeff(n, l);
    if (dl == 0) continue;
    if (l < k)
      total += depth_one_family(DepthOneKind::eta, 1, k - l, m) * to_double(dl);
    else
      total += exact(dl * poly_bernoulli_B(upper, l - k));
  }
  return total;
}

Rational rhs_eta_ones_neg(int r, int n, int m, OnesExponent exponent) {
  require(n >= 0 && r > n + 1, "η({1}^{r-1},-n;m+1) theorem requires r > n+1");
  require(m >= 0, "m must be nonnegative");
  const auto table = coefficient_table(Family::E, n);
  const int shift = exponent == OnesExponent::corrected ? 1 : 0;
  Rational total = 0;
  for (int l = 1; l <= n + 1; ++l)
    for (int j = 0; j <= n; ++j) {
      const Rational e = table->at(l, j);
      if (e == 0) continue;
      Rational term = Rational(binomial(m + r - l, m)) * e * pow(Rational(n - j + 1), -(m + r - l + shift));
      if ((r - l) % 2 == 1) term = -term;
      total += term;
    }
  return total;
}

NumericValue rhs_xi_neg_pos(int n, int k, int m) {
  require(n >= 0 && k > n + 1, "ξ(-n,k;m+1) theorem requires k > n+1");
  require(m >= 0, "m must be nonnegative");
  NumericValue total;
  for (int l = 0; l <= n + 1; ++l) {
    const Rational dl = d_coeff(n, l);
    if (dl != 0) total += depth_one_family(DepthOneKind::xi, 1, k - l, m) * to_double(dl);
  }
  return total;
}

NumericValue rhs_xitilde_pos_neg(int k, int n, int m, XitildeBase base) {
  require(k >= 1 && k < n, "ξ̃ requires k < n");
  require(m >= 0, "m must be nonnegative");
  const auto table = coefficient_table(Family::Aprime, n, k);
  const int extra = base == XitildeBase::proof ? 1 : 0;
  NumericValue total;
  for (int l = 0; l <= k; ++l)
    for (int j = 0; j <= n - l - 1; ++j) {
      const Rational a = table->at(l, j);
      if (a == 0) continue;
      const int c = n - l - j + (l <= k - 2 ? extra : 0);
      total += block_integral(k - l, c, m) * to_double(a);
    }
  return total;
}

NumericValue depth_one_family(DepthOneKind kind, int r, int k, int m) {
  require(r >= 1 && k >= 1 && m >= 0, "depth-one family needs r >= 1, k >= 1, m >= 0");
  NumericValue total;
  for (const auto& a : compositions(m, k)) {
    std::vector<int> exps(a);
    for (auto& e : exps) e += 1;
    exps.back() += r;
    const double weight = to_double(Rational(binomial(a.back() + r, r)));
    const NumericValue z = kind == DepthOneKind::xi ? mzv_num(exps) : mzsv_num(exps);
    total += z * weight;
  }
  if (kind == DepthOneKind::eta && r % 2 == 0) total = total * -1.0;
  return total;
}

}  // namespace mixzeta
