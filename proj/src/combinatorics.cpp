#include "mixzeta/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace mixzeta {

namespace {

void require_nonnegative(long v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

// B_j with B_1 = -1/2, from sum_{j=0}^{n} C(n+1, j) B_j = 0 (n >= 1).
class BernoulliTable {
 public:
  Rational get(int j) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= j) extend();
    return values_[static_cast<std::size_t>(j)];
  }

 private:
  void extend() {
    const int n = static_cast<int>(values_.size());
    if (n == 0) {
      values_.emplace_back(1);
      return;
    }
    if (n >= 3 && n % 2 == 1) {
      values_.emplace_back(0);
      return;
    }
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * values_[static_cast<std::size_t>(j)];
    values_.push_back(-acc / Rational(n + 1));
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

// Triangular table grown row by row from a two-term recurrence.
template <typename Recurrence>
class StirlingTable {
 public:
  explicit StirlingTable(Recurrence rule) : rule_(rule) {}

  Integer get(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) extend();
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  void extend() {
    const int n = static_cast<int>(rows_.size());
    if (n == 0) {
      rows_.push_back({Integer(1)});
      return;
    }
    const auto& prev = rows_.back();
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      const Integer same = k <= n - 1 ? prev[static_cast<std::size_t>(k)] : Integer(0);
      const Integer left = k >= 1 ? prev[static_cast<std::size_t>(k - 1)] : Integer(0);
      row[static_cast<std::size_t>(k)] = rule_(n - 1, k, same, left);
    }
    rows_.push_back(std::move(row));
  }

  Recurrence rule_;
  std::mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

// [n+1, k] = [n, k-1] + n [n, k]
auto stirling1_rule = [](int n, int /*k*/, const Integer& same, const Integer& left) -> Integer { return left + n * same; };
// {n+1, k} = k {n, k} + {n, k-1}
auto stirling2_rule = [](int /*n*/, int k, const Integer& same, const Integer& left) -> Integer { return k * same + left; };

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

Integer binomial(long n, long k) {
  require_nonnegative(n, "binomial n");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  require_nonnegative(n, "factorial argument");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational bernoulli(int j, BernoulliConvention convention) {
  require_nonnegative(j, "Bernoulli index");
  Rational b = bernoulli_table().get(j);
  if (j == 1 && convention == BernoulliConvention::plus) b = -b;
  return b;
}

Rational zeta_nonpositive(int m) {
  require_nonnegative(m, "zeta_nonpositive argument");
  if (m == 0) return make_rational(-1, 2);
  return -bernoulli(m + 1, BernoulliConvention::minus) / Rational(m + 1);
}

Integer stirling1_unsigned(int n, int k) {
  require_nonnegative(n, "Stirling n");
  static StirlingTable table(stirling1_rule);
  return table.get(n, k);
}

Integer stirling2(int n, int k) {
  require_nonnegative(n, "Stirling n");
  static StirlingTable table(stirling2_rule);
  return table.get(n, k);
}

// E_i(z) = sum_{j=0}^{i-1} sum_{l=0}^{j+1} (-1)^l C(i+1, l) (j-l+1)^i z^{i-j}
BasisPolynomial eulerian_poly(int i) {
  require_nonnegative(i, "Eulerian index");
  if (i == 0) return BasisPolynomial::monomial(1);
  std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
  for (int j = 0; j <= i - 1; ++j) {
    Integer acc = 0;
    for (int l = 0; l <= j + 1; ++l) {
      Integer power;
      const long base = j - l + 1;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(i));
      Integer term = binomial(i + 1, l) * power;
      acc += (l % 2 == 0) ? term : Integer(-term);
    }
    c[static_cast<std::size_t>(i - j)] = acc;
  }
  return BasisPolynomial(std::move(c));
}

}  // namespace mixzeta
