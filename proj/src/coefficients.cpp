#include "mixzeta/coefficients.hpp"

#include "mixzeta/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace mixzeta {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw IndexRangeError(message);
}

Integer ipow(long base, long e) {
  if (e == 0) return 1;
  if (base == 0) return 0;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), static_cast<unsigned long>(e));
  if (base < 0 && e % 2 == 1) out = -out;
  return out;
}

Integer sign(long e) { return (e % 2 == 0) ? 1 : -1; }

std::string range_message(const char* what, int n, int a, int b = -1) {
  std::string msg = std::string(what) + " index out of range (n=" + std::to_string(n) + ", " + std::to_string(a);
  if (b >= 0) msg += ", " + std::to_string(b);
  return msg + ")";
}

bool pprime_row_exists(int n, int k, int i) {
  return (i >= n - k && i <= n - 1) || i == n - k - 1;
}

std::shared_ptr<const CoefficientTable> build_table(Family family, int n, int k) {
  auto table = std::make_shared<CoefficientTable>();
  table->family = family;
  table->n = n;
  table->k = k;
  auto put_poly = [&](int row, const BasisPolynomial& p) {
    for (int j = 0; j <= p.degree(); ++j) table->entries[{row, j}] = p.coefficient(j);
  };
  switch (family) {
    case Family::P:
      for (int i = 0; i <= n - 1; ++i) put_poly(i, p_poly(n, i));
      break;
    case Family::A:
      for (int l = 0; l <= n - 1; ++l) {
        const auto q = rebase_to_one_minus_z(p_poly(n, n - l - 1));
        for (int j = 0; j <= n - l - 1; ++j) table->entries[{l, j}] = q.coefficient(j);
      }
      break;
    case Family::D:
      for (int l = 0; l <= n + 1; ++l) table->entries[{0, l}] = d_coeff(n, l);
      break;
    case Family::Q:
      for (int i = 1; i <= n + 1; ++i) put_poly(i, q_poly(n, i));
      break;
    case Family::E:
      for (int l = 1; l <= n + 1; ++l) {
        const auto q = rebase_to_one_minus_z(q_poly(n, l));
        for (int j = 0; j <= n; ++j) table->entries[{l, j}] = q.coefficient(j);
      }
      break;
    case Family::Pprime:
      for (int i = 0; i <= n - 1; ++i)
        if (pprime_row_exists(n, k, i)) put_poly(i, pprime_poly(n, k, i));
      break;
    case Family::Aprime:
      for (int l = 0; l <= k; ++l) {
        const auto q = rebase_to_one_minus_z(pprime_poly(n, k, n - l - 1));
        for (int j = 0; j <= n - l - 1; ++j) table->entries[{l, j}] = q.coefficient(j);
      }
      break;
  }
  return table;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::P: return "P";
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::Q: return "Q";
    case Family::E: return "E";
    case Family::Pprime: return "Pprime";
    case Family::Aprime: return "Aprime";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::P, Family::A, Family::D, Family::Q, Family::E, Family::Pprime, Family::Aprime})
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown coefficient family '" + name + "' (expected P|A|D|Q|E|Pprime|Aprime)");
}

BasisPolynomial rebase_to_one_minus_z(const BasisPolynomial& p) {
  if (p.basis() != Basis::z && !p.is_zero())
    throw std::invalid_argument("rebase_to_one_minus_z expects a polynomial in powers of z");
  return p.to_basis(Basis::one_minus_z);
}

BasisPolynomial p_poly(int n, int i) {
  require(n >= 1 && i >= 0 && i <= n - 1, range_message("P", n, i));
  return (eulerian_poly(i + 1) * Rational(binomial(n, i + 1))).divide_by_z_power(1);
}

BasisPolynomial p_poly_double_sum(int n, int i) {
  require(n >= 1 && i >= 0 && i <= n - 1, range_message("P", n, i));
  std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
  for (int j = 0; j <= i; ++j) {
    Integer acc = 0;
    for (int l = 0; l <= j + 1; ++l) acc += sign(l) * binomial(i + 2, l) * ipow(j - l + 1, i + 1);
    c[static_cast<std::size_t>(i - j)] = acc;
  }
  return BasisPolynomial(std::move(c)) * Rational(binomial(n, i + 1));
}

Rational d_coeff(int n, int l) {
  require(n >= 0 && l >= 0 && l <= n + 1, range_message("D", n, l));
  if (l == n + 1) return Rational(1) / Rational(n + 1);
  if (l == 0) return n == 0 ? Rational(-1) : Rational(0);
  return Rational(binomial(n, l) * sign(n - l)) * zeta_nonpositive(n - l);
}

Rational a_coeff(int n, int l, int j, CoefficientRoute route) {
  require(n >= 1 && l >= 0 && l <= n - 1 && j >= 0 && j <= n - l - 1, range_message("A", n, l, j));
  if (route == CoefficientRoute::rebase) return coefficient_table(Family::A, n)->at(l, j);
  Integer acc = 0;
  for (int b = 0; b <= n - l - j - 1; ++b)
    for (int d = 0; d <= b + 1; ++d)
      acc += sign(d + j) * binomial(n - l + 1, d) * binomial(n - l - b - 1, j) * ipow(b - d + 1, n - l);
  return Rational(binomial(n, l) * acc);
}

BasisPolynomial q_poly(int n, int i) {
  require(n >= 0 && i >= 1 && i <= n + 1, range_message("Q", n, i));
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = i; k <= n + 1; ++k) {
    const Integer weight = stirling2(n + 1, k) * stirling1_unsigned(k, i);
    for (int l = 0; l <= n - k + 1; ++l)
      c[static_cast<std::size_t>(k + l - 1)] += Rational(sign(l) * weight * binomial(n - k + 1, l));
  }
  return BasisPolynomial(std::move(c));
}

BasisPolynomial q_poly_product_form(int n, int i) {
  require(n >= 0 && i >= 1 && i <= n + 1, range_message("Q", n, i));
  const BasisPolynomial z = BasisPolynomial::monomial(1);
  const BasisPolynomial one_minus_z({Rational(1), Rational(-1)});
  BasisPolynomial acc;
  for (int k = i; k <= n + 1; ++k) {
    BasisPolynomial term({Rational(stirling2(n + 1, k) * stirling1_unsigned(k, i))});
    for (int e = 0; e < k - 1; ++e) term = term * z;
    for (int e = 0; e < n - k + 1; ++e) term = term * one_minus_z;
    acc += term;
  }
  return acc;
}

Rational e_coeff(int n, int l, int j, CoefficientRoute route) {
  require(n >= 0 && l >= 1 && l <= n + 1 && j >= 0 && j <= n, range_message("E", n, l, j));
  if (route == CoefficientRoute::rebase) return coefficient_table(Family::E, n)->at(l, j);
  Integer acc = 0;
  for (int M = j + 1; M <= n + 1; ++M)
    for (int k = l; k <= M; ++k)
      acc += sign(M - k + j) * stirling2(n + 1, k) * stirling1_unsigned(k, l) * binomial(n - k + 1, M - k) *
             binomial(M - 1, j);
  return Rational(acc);
}

BasisPolynomial pprime_poly(int n, int k, int i) {
  require(n >= 1 && k >= 1 && k < n, "P' requires 1 <= k < n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  require(i >= 0 && i <= n - 1 && pprime_row_exists(n, k, i),
          "P' row " + std::to_string(i) + " is not part of the k < n expansion (n=" + std::to_string(n) +
              ", k=" + std::to_string(k) + ")");
  if (i >= n - k) {
    const int m = n - 1 - i;
    return (eulerian_poly(n - m) * Rational(binomial(n, m))).divide_by_z_power(1);
  }
  BasisPolynomial acc;
  for (int j = k; j <= n; ++j) acc += eulerian_poly(n - j) * eulerian_poly(j - k) * Rational(binomial(n, j));
  return acc.divide_by_z_power(2);
}

Rational aprime_coeff(int n, int k, int l, int j) {
  require(n >= 1 && k >= 1 && k < n, "A' requires 1 <= k < n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  require(l >= 0 && l <= k && j >= 0 && j <= n - l - 1, range_message("A'", n, l, j));
  return coefficient_table(Family::Aprime, n, k)->at(l, j);
}

Rational CoefficientTable::at(int row, int col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? Rational(0) : it->second;
}

int CoefficientTable::max_row() const {
  int best = -1;
  for (const auto& [key, value] : entries) best = std::max(best, key.first);
  return best;
}

std::shared_ptr<const CoefficientTable> coefficient_table(Family family, int n, int k) {
  const bool needs_k = family == Family::Pprime || family == Family::Aprime;
  if (!needs_k) k = 0;
  switch (family) {
    case Family::P:
    case Family::A:
      require(n >= 1, "P/A tables need n >= 1");
      break;
    case Family::D:
    case Family::Q:
    case Family::E:
      require(n >= 0, "D/Q/E tables need n >= 0");
      break;
    case Family::Pprime:
    case Family::Aprime:
      require(n >= 1 && k >= 1 && k < n, "P'/A' tables need 1 <= k < n");
      break;
  }

  using Key = std::tuple<Family, int, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const CoefficientTable>> cache;
  const Key key{family, n, k};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = build_table(family, n, k);
  std::lock_guard lock(mutex);
  // A concurrent builder may have won; both tables are identical, keep the first.
  return cache.emplace(key, std::move(built)).first->second;
}

}  // namespace mixzeta
