#include "mixzeta/numeric.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mixzeta {

namespace {

using LD = long double;

constexpr LD kEps = LDBL_EPSILON;
constexpr int kHalfTerms = 120;
constexpr long kMaxCutoff = 4000000;

void require_convergent(const std::vector<int>& p) {
  if (p.empty()) return;
  for (int e : p)
    if (e < 1) throw std::domain_error("zeta exponents must be >= 1");
  if (p.back() < 2) throw std::domain_error("divergent zeta: last exponent must be >= 2");
}

// Letters of an iterated integral, top letter first: false = dt/t, true = dt/(1-t).
using Word = std::vector<bool>;

Word word_of(const std::vector<int>& p) {
  Word w;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    w.insert(w.end(), static_cast<std::size_t>(*it - 1), false);
    w.push_back(true);
  }
  return w;
}

// Iterated integral from 0 to 1/2 of a word ending in dt/(1-t):
// sum_{n_1 > ... > n_d} 2^{-n_1} / prod n_i^{c_i}.
LD lo_half(const Word& w) {
  if (w.empty()) return 1;
  std::vector<int> c;
  int zeros = 0;
  for (bool letter : w) {
    if (letter) {
      c.push_back(zeros + 1);
      zeros = 0;
    } else {
      ++zeros;
    }
  }
  std::vector<LD> g(kHalfTerms + 1, 0);
  for (int n = 1; n <= kHalfTerms; ++n) g[static_cast<std::size_t>(n)] = std::pow(static_cast<LD>(n), -c.back());
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    LD prefix = 0;
    std::vector<LD> next(g.size(), 0);
    for (int n = 1; n <= kHalfTerms; ++n) {
      next[static_cast<std::size_t>(n)] = prefix * std::pow(static_cast<LD>(n), -c[static_cast<std::size_t>(i)]);
      prefix += g[static_cast<std::size_t>(n)];
    }
    g.swap(next);
  }
  LD value = 0;
  for (int n = kHalfTerms; n >= 1; --n) value += std::ldexp(g[static_cast<std::size_t>(n)], -n);
  return value;
}

NumericValue mzv_holder(const std::vector<int>& p) {
  if (p.empty()) return {1.0, 0.0};
  const Word w = word_of(p);
  const std::size_t L = w.size();
  LD value = 0;
  LD magnitude = 0;
  for (std::size_t j = 0; j <= L; ++j) {
    Word head;
    for (std::size_t i = j; i-- > 0;) head.push_back(!w[i]);
    const Word tail(w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
    const LD term = lo_half(head) * lo_half(tail);
    value += term;
    magnitude += std::fabs(term);
  }
  const double v = static_cast<double>(value);
  return {v, static_cast<double>(16 * kEps * L * magnitude) + std::fabs(v) * DBL_EPSILON};
}

// Calls f(merged, merges) for every way of adding up runs of adjacent entries.
template <typename F>
void for_each_merge(const std::vector<int>& p, F&& f) {
  if (p.empty()) {
    f(p, 0);
    return;
  }
  const std::size_t gaps = p.size() - 1;
  for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
    std::vector<int> q{p[0]};
    int merges = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (mask & (1UL << (i - 1))) {
        q.back() += p[i];
        ++merges;
      } else {
        q.push_back(p[i]);
      }
    }
    f(q, merges);
  }
}

NumericValue mzsv_holder(const std::vector<int>& p) {
  static std::mutex mutex;
  static std::map<std::vector<int>, NumericValue> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  NumericValue total;
  for_each_merge(p, [&](const std::vector<int>& q, int) { total += mzv_holder(q); });
  std::lock_guard lock(mutex);
  return cache.emplace(p, total).first->second;
}

struct TailValue {
  LD value = 0;
  LD err = 0;
};

// sum_{b <= x_1 <= ... <= x_d} prod x_i^{-q_i} for large b, from the integral over
// the shifted region plus half-weighted diagonals.
TailValue star_tail(const std::vector<int>& q, LD b, LD alpha_spread) {
  if (q.size() == 1) {
    const NumericValue h = hurwitz_num(q[0], static_cast<double>(b));
    return {h.value, h.abs_error};
  }
  int weight = 0;
  for (int e : q) weight += e;
  LD value = 0;
  for_each_merge(q, [&](const std::vector<int>& r, int merges) {
    const int d = static_cast<int>(r.size());
    LD c = 1;
    int suffix = 0;
    for (int i = d - 1; i >= 0; --i) {
      suffix += r[static_cast<std::size_t>(i)];
      c /= static_cast<LD>(suffix - (d - i));
    }
    value += std::ldexp(c, -merges) * std::pow(b - 0.5L, d - weight);
  });
  return {value, std::fabs(value) * (weight + 1 + alpha_spread) / b};
}

NumericValue star_nested_once(const std::vector<int>& p, const std::vector<LD>& alpha, long cutoff) {
  const std::size_t n = p.size();
  std::vector<LD> sums(n + 1, 0), carry(n + 1, 0);
  sums[0] = 1;
  for (long m = 0; m <= cutoff; ++m) {
    for (std::size_t j = 1; j <= n; ++j) {
      const LD term = std::pow(static_cast<LD>(m) + alpha[j - 1], -p[j - 1]) * sums[j - 1];
      // Kahan summation
      const LD y = term - carry[j];
      const LD t = sums[j] + y;
      carry[j] = (t - sums[j]) - y;
      sums[j] = t;
    }
  }
  LD value = sums[n];
  LD err = 4 * kEps * static_cast<LD>(n) * std::fabs(value);
  for (std::size_t j = 0; j < n; ++j) {
    const std::vector<int> rest(p.begin() + static_cast<std::ptrdiff_t>(j), p.end());
    LD lo = alpha[j], hi = alpha[j];
    for (std::size_t i = j; i < n; ++i) {
      lo = std::min(lo, alpha[i]);
      hi = std::max(hi, alpha[i]);
    }
    const TailValue tail = star_tail(rest, static_cast<LD>(cutoff + 1) + alpha[j], hi - lo);
    value += sums[j] * tail.value;
    err += std::fabs(sums[j]) * tail.err;
  }
  return {static_cast<double>(value), static_cast<double>(err) + std::fabs(static_cast<double>(value)) * DBL_EPSILON};
}

NumericValue star_nested(const std::vector<int>& p, const std::vector<LD>& alpha, const ZetaOptions& options) {
  if (p.empty()) return {1.0, 0.0};
  if (options.cutoff < 1) throw std::invalid_argument("summation cutoff must be positive");
  long cutoff = options.cutoff;
  NumericValue best = star_nested_once(p, alpha, cutoff);
  while (best.abs_error > options.tol && cutoff * 4 <= kMaxCutoff) {
    cutoff *= 4;
    best = star_nested_once(p, alpha, cutoff);
  }
  return best;
}

// F(j, c) = sum_{c <= M_j <= ... <= M_n} prod M_i^{-p_i}
NumericValue shifted_star(const std::vector<int>& p, std::size_t j, long c,
                          std::map<std::pair<std::size_t, long>, NumericValue>& memo) {
  if (j == p.size()) return {1.0, 0.0};
  const std::vector<int> rest(p.begin() + static_cast<std::ptrdiff_t>(j), p.end());
  if (c == 1) return mzsv_holder(rest);
  if (auto it = memo.find({j, c}); it != memo.end()) return it->second;
  NumericValue out = mzsv_holder(rest);
  for (long M = 1; M < c; ++M)
    out -= shifted_star(p, j + 1, M, memo) * std::pow(static_cast<double>(M), -p[j]);
  memo.emplace(std::pair{j, c}, out);
  return out;
}

}  // namespace

HurwitzStarArgs HurwitzStarArgs::uniform(std::vector<int> exponents, const Rational& c) {
  HurwitzStarArgs args;
  args.shifts.assign(exponents.size(), c);
  args.exponents = std::move(exponents);
  return args;
}

NumericValue mzv_num(const std::vector<int>& p, const ZetaOptions& options) {
  if (p.empty()) throw std::invalid_argument("mzv_num needs at least one exponent");
  require_convergent(p);
  if (options.route == ZetaRoute::holder) return mzv_holder(p);
  NumericValue total;
  for_each_merge(p, [&](const std::vector<int>& q, int merges) {
    const NumericValue v = star_nested(q, std::vector<LD>(q.size(), 1), options);
    if (merges % 2 == 0)
      total += v;
    else
      total -= v;
  });
  return total;
}

NumericValue mzsv_num(const std::vector<int>& p, const ZetaOptions& options) {
  if (p.empty()) throw std::invalid_argument("mzsv_num needs at least one exponent");
  require_convergent(p);
  if (options.route == ZetaRoute::holder) return mzsv_holder(p);
  return star_nested(p, std::vector<LD>(p.size(), 1), options);
}

NumericValue mhzsv_num(const HurwitzStarArgs& args, const ZetaOptions& options) {
  if (args.exponents.size() != args.shifts.size())
    throw std::invalid_argument("Hurwitz star exponents and shifts differ in length");
  require_convergent(args.exponents);
  for (const auto& a : args.shifts)
    if (a <= 0) throw std::domain_error("Hurwitz star shifts must be positive");
  if (args.exponents.empty()) return {1.0, 0.0};

  bool uniform_integer = true;
  for (const auto& a : args.shifts) uniform_integer = uniform_integer && a == args.shifts.front() && is_integer(a);
  if (uniform_integer && options.route == ZetaRoute::holder) {
    std::map<std::pair<std::size_t, long>, NumericValue> memo;
    return shifted_star(args.exponents, 0, args.shifts.front().get_num().get_si(), memo);
  }
  std::vector<LD> alpha;
  for (const auto& a : args.shifts) alpha.push_back(static_cast<LD>(to_double(a)));
  return star_nested(args.exponents, alpha, options);
}

}  // namespace mixzeta
