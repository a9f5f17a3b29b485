#include "mixzeta/numeric.hpp"

#include "mixzeta/coefficients.hpp"
#include "mixzeta/combinatorics.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace mixzeta {

namespace {

using LD = long double;

constexpr LD kEps = LDBL_EPSILON;
constexpr int kEmTerms = 12;
constexpr int kEmShift = 20;

struct Acc {
  LD value = 0;
  LD err = 0;
};

Acc operator-(Acc a, Acc b) { return {a.value - b.value, a.err + b.err}; }
Acc operator*(LD s, Acc a) { return {s * a.value, std::fabs(s) * a.err}; }

NumericValue finish(const Acc& a) {
  const double v = static_cast<double>(a.value);
  const double rounding = std::fabs(v) * DBL_EPSILON;
  return {v, static_cast<double>(a.err) + rounding};
}

// B_{2j}/(2j)! for j = 0..kEmTerms+1.
const std::array<LD, kEmTerms + 2>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<LD, kEmTerms + 2> t{};
    for (int j = 0; j <= kEmTerms + 1; ++j)
      t[static_cast<std::size_t>(j)] = static_cast<LD>(
          to_double(bernoulli(2 * j, BernoulliConvention::minus) / Rational(factorial(2 * j))));
    return t;
  }();
  return table;
}

// sum_{n>=0} (n + alpha)^{-s} by Euler-Maclaurin after kEmShift explicit terms.
Acc hurwitz_ld(LD s, LD alpha) {
  const auto& b = bernoulli_over_factorial();
  LD head = 0;
  LD magnitude = 0;
  for (int n = kEmShift - 1; n >= 0; --n) {
    const LD term = std::pow(static_cast<LD>(n) + alpha, -s);
    head += term;
    magnitude += term;
  }
  const LD a = kEmShift + alpha;
  LD tail = std::pow(a, 1 - s) / (s - 1) + std::pow(a, -s) / 2;
  // rising factorial s (s+1) ... (s+2j-2) times a^{-s-2j+1}
  LD rising = s;
  LD power = std::pow(a, -s - 1);
  LD last = 0;
  for (int j = 1; j <= kEmTerms + 1; ++j) {
    const LD term = b[static_cast<std::size_t>(j)] * rising * power;
    if (j == kEmTerms + 1) {
      last = term;
      break;
    }
    tail += term;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    power /= a * a;
  }
  const LD value = head + tail;
  return {value, std::fabs(last) + 4 * kEps * (magnitude + std::fabs(tail))};
}

const std::vector<Acc>& zeta_integers() {
  static const auto table = [] {
    std::vector<Acc> t(80);
    for (int k = 2; k < 80; ++k) t[static_cast<std::size_t>(k)] = hurwitz_ld(k, 1);
    return t;
  }();
  return table;
}

Acc zeta_int(int k) {
  if (k >= 2 && k < 80) return zeta_integers()[static_cast<std::size_t>(k)];
  if (k >= 80) return {1, kEps};
  return {static_cast<LD>(to_double(zeta_nonpositive(-k))), 0};
}

// Eulerian coefficients of E_n in powers of z and of (1 - z), as long doubles.
struct EulerianPair {
  std::vector<LD> z_basis;
  std::vector<LD> w_basis;
};

const EulerianPair& eulerian_pair(int n) {
  static std::mutex mutex;
  static std::map<int, EulerianPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const auto poly = eulerian_poly(n);
  const auto rebased = rebase_to_one_minus_z(poly);
  EulerianPair pair;
  for (int j = 0; j <= poly.degree(); ++j) pair.z_basis.push_back(static_cast<LD>(to_double(poly.coefficient(j))));
  for (int j = 0; j <= rebased.degree(); ++j)
    pair.w_basis.push_back(static_cast<LD>(to_double(rebased.coefficient(j))));
  return cache.emplace(n, std::move(pair)).first->second;
}

// Li_{-n}(x) for -1 <= x < 1.
Acc li_nonpositive_direct(int n, LD x) {
  const auto& c = eulerian_pair(n).z_basis;
  LD value = 0;
  LD magnitude = 0;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    value = value * x + c[static_cast<std::size_t>(j)];
    magnitude = magnitude * std::fabs(x) + std::fabs(c[static_cast<std::size_t>(j)]);
  }
  const LD scale = std::pow(1 - x, -(n + 1));
  return {value * scale, (n + 4) * kEps * magnitude * scale};
}

// Li_{-n}(1 - 1/u) for 0 < u <= 1/2: sum_j c_j u^{n+1-j}.
Acc li_nonpositive_inverted(int n, LD u) {
  const auto& c = eulerian_pair(n).w_basis;
  LD value = 0;
  LD magnitude = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const LD term = c[j] * std::pow(u, n + 1 - static_cast<int>(j));
    value += term;
    magnitude += std::fabs(term);
  }
  return {value, (n + 4) * kEps * magnitude};
}

// Direct series for |x| <= 1/2.
Acc li_series(int k, LD x) {
  LD value = 0;
  LD magnitude = 0;
  LD power = 1;
  for (int m = 1; m < 200; ++m) {
    power *= x;
    const LD term = power * std::pow(static_cast<LD>(m), -k);
    value += term;
    magnitude += std::fabs(term);
    if (std::fabs(term) < kEps * kEps * (1 + std::fabs(value))) break;
    if (m == 199) return {value, 2 * std::fabs(term)};
  }
  return {value, 4 * kEps * magnitude};
}

// Li_k(e^mu) for -0.75 < mu <= 0, k >= 2.
Acc li_mu_series(int k, LD mu) {
  if (mu == 0) return zeta_int(k);
  LD value = 0;
  LD err = 0;
  LD magnitude = 0;
  LD power = 1;  // mu^j / j!
  LD harmonic = 0;
  for (int i = 1; i < k; ++i) harmonic += static_cast<LD>(1) / i;
  for (int j = 0; j < k + 60; ++j) {
    if (j > 0) power *= mu / j;
    LD term;
    if (j == k - 1) {
      term = power * (harmonic - std::log(-mu));
    } else {
      const Acc z = zeta_int(k - j);
      term = z.value * power;
      err += z.err * std::fabs(power);
    }
    value += term;
    magnitude += std::fabs(term);
    // zeta(k - j) vanishes for every other j beyond k, so test only the nonzero terms
    if (j > k && term != 0 && std::fabs(term) < kEps * kEps * (1 + std::fabs(value))) break;
  }
  return {value, err + 8 * kEps * magnitude};
}

// Li_k(x) for 0 <= x <= 1 with mu = log x, k >= 2.
Acc li_unit(int k, LD x, LD mu) {
  if (x <= 0.5L) return li_series(k, x);
  return li_mu_series(k, mu);
}

// eta(2j) = (1 - 2^{1-2j}) zeta(2j)
Acc dirichlet_eta_even(int two_j) {
  const Acc z = zeta_int(two_j);
  const LD f = 1 - std::pow(static_cast<LD>(2), 1 - two_j);
  return f * z;
}

// Li_k(-y) for y > 0, k >= 2, with log_y = log y supplied accurately.
Acc li_negative(int k, LD y, LD log_y) {
  if (y <= 0.5L) return li_series(k, -y);
  if (y <= 1) {
    const LD y2 = y * y;
    return std::pow(static_cast<LD>(2), 1 - k) * li_unit(k, y2, 2 * log_y) - li_unit(k, y, log_y);
  }
  // Li_k(-y) = -(-1)^k Li_k(-1/y) - L^k/k! - 2 sum_j L^{k-2j}/(k-2j)! eta(2j)
  const LD L = log_y;
  Acc reflected = li_negative(k, 1 / y, -L);
  if (k % 2 == 1) reflected = static_cast<LD>(-1) * reflected;
  Acc out = static_cast<LD>(-1) * reflected;
  LD factorial_k = 1;
  for (int i = 2; i <= k; ++i) factorial_k *= i;
  const LD lead = std::pow(L, k) / factorial_k;
  out.value -= lead;
  LD magnitude = std::fabs(lead);
  for (int j = 1; 2 * j <= k; ++j) {
    LD fact = 1;
    for (int i = 2; i <= k - 2 * j; ++i) fact *= i;
    const LD power = std::pow(L, k - 2 * j) / fact;
    const Acc eta = dirichlet_eta_even(2 * j);
    out.value -= 2 * power * eta.value;
    out.err += 2 * std::fabs(power) * eta.err;
    magnitude += 2 * std::fabs(power * eta.value);
  }
  out.err += 8 * kEps * (magnitude + std::fabs(out.value));
  return out;
}

Acc polylog_ld(int k, LD x) {
  if (k <= 0) {
    if (x >= -1) return li_nonpositive_direct(-k, x);
    return li_nonpositive_inverted(-k, 1 / (1 - x));
  }
  if (k == 1) return {-std::log1p(-x), 2 * kEps * std::fabs(std::log1p(-x))};
  if (x >= 0) return li_unit(k, x, x > 0 ? std::log(x) : 0);
  return li_negative(k, -x, std::log(-x));
}

}  // namespace

NumericValue& NumericValue::operator+=(const NumericValue& rhs) {
  value += rhs.value;
  abs_error += rhs.abs_error + std::fabs(value) * DBL_EPSILON;
  return *this;
}

NumericValue& NumericValue::operator-=(const NumericValue& rhs) {
  value -= rhs.value;
  abs_error += rhs.abs_error + std::fabs(value) * DBL_EPSILON;
  return *this;
}

NumericValue operator*(const NumericValue& a, const NumericValue& b) {
  const double v = a.value * b.value;
  return {v, std::fabs(a.value) * b.abs_error + std::fabs(b.value) * a.abs_error + a.abs_error * b.abs_error +
                 std::fabs(v) * DBL_EPSILON};
}

NumericValue operator*(const NumericValue& a, double s) {
  const double v = a.value * s;
  return {v, std::fabs(s) * a.abs_error + std::fabs(v) * DBL_EPSILON};
}

bool NumericValue::agrees_with(const NumericValue& other, double slack) const {
  return std::fabs(value - other.value) <= abs_error + other.abs_error + slack;
}

std::ostream& operator<<(std::ostream& os, const NumericValue& v) {
  const auto precision = os.precision(17);
  os << v.value << " +/- ";
  os.precision(3);
  os << v.abs_error;
  os.precision(precision);
  return os;
}

NumericValue gamma_real(double x) {
  if (!(x > 0)) throw std::domain_error("gamma_real needs x > 0");
  if (x == std::floor(x) && x <= 171) {
    const double v = to_double(Rational(factorial(static_cast<long>(x) - 1)));
    return {v, x <= 23 ? 0.0 : std::fabs(v) * DBL_EPSILON};
  }
  const double v = std::tgamma(x);
  return {v, 8 * DBL_EPSILON * std::fabs(v)};
}

NumericValue zeta_num(double s) {
  if (!(s > 1)) throw std::domain_error("zeta_num needs s > 1");
  return finish(hurwitz_ld(s, 1));
}

NumericValue hurwitz_num(double s, double alpha) {
  if (!(s > 1)) throw std::domain_error("hurwitz_num needs s > 1");
  if (!(alpha > 0)) throw std::domain_error("hurwitz_num needs alpha > 0");
  return finish(hurwitz_ld(s, alpha));
}

NumericValue polylog_num(int k, double x) {
  if (!(x < 1)) throw std::domain_error("polylog_num needs x < 1");
  return finish(polylog_ld(k, x));
}

NumericValue polylog_one_minus_exp_plus(int k, double t) {
  if (!(t >= 0)) throw std::domain_error("polylog_one_minus_exp_plus needs t >= 0");
  const LD tl = t;
  const LD y = std::expm1(tl);  // argument is -y
  if (k == 1) return {-t, 0.0};
  if (k <= 0) {
    if (y <= 1) return finish(li_nonpositive_direct(-k, -y));
    return finish(li_nonpositive_inverted(-k, std::exp(-tl)));
  }
  const LD log_y = tl + std::log1p(-std::exp(-tl));
  return finish(li_negative(k, y, log_y));
}

NumericValue polylog_one_minus_exp_minus(int k, double t) {
  if (!(t > 0)) throw std::domain_error("polylog_one_minus_exp_minus needs t > 0");
  const LD tl = t;
  const LD x = -std::expm1(-tl);
  if (k == 1) return {t, 0.0};
  if (k <= 0) {
    if (x <= 0.5L) return finish(li_nonpositive_direct(-k, x));
    // 1/(1-x) = e^t: sum_j c_j e^{(n+1-j) t}
    const int n = -k;
    const auto& c = eulerian_pair(n).w_basis;
    Acc out;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const LD term = c[j] * std::exp((n + 1 - static_cast<int>(j)) * tl);
      out.value += term;
      out.err += (n + 4) * kEps * std::fabs(term);
    }
    return finish(out);
  }
  return finish(li_unit(k, x, std::log1p(-std::exp(-tl))));
}

}  // namespace mixzeta
