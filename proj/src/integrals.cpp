#include "mixzeta/integrals.hpp"

#include "mixzeta/coefficients.hpp"
#include "mixzeta/combinatorics.hpp"

#include <cfloat>
#include <cstdio>
#include <cmath>
#include <map>
#include <tuple>

namespace mixzeta {

namespace {

constexpr double kCutoffT = 650.0;

// Li_p at one point, with the auxiliary quantities the expansions use.
struct Point {
  double z = 0;
  double w = 0;   // 1 / (1 - z)
  double zw = 0;  // z / (1 - z)
  double L = 0;   // -log(1 - z)
  NumericValue (*li)(int, double) = nullptr;
  double li_arg = 0;  // argument passed to li
};

Point eta_point(double t) {
  return {-std::expm1(t), std::exp(-t), std::expm1(-t), -t, &polylog_one_minus_exp_plus, t};
}

Point xi_point(double t) {
  return {-std::expm1(-t), std::exp(t), std::expm1(t), t, &polylog_one_minus_exp_minus, t};
}

Point real_point(double z) {
  const double w = 1 / (1 - z);
  return {z, w, z * w, -std::log1p(-z), &polylog_num, z};
}

// coef * w^w_power * Li_order(z), divided by z when over_z is set.
struct PolylogTerm {
  double coef;
  int w_power;
  int order;
  bool over_z;
};

// coef * (z w)^zw_power * w^w_power * L^log_power
struct MonomialTerm {
  double coef;
  int zw_power;
  int w_power;
  int log_power;
};

// A finite expansion of Li_index(z) / z.
struct Plan {
  std::vector<PolylogTerm> polylogs;
  std::vector<MonomialTerm> monomials;

  NumericValue evaluate(const Point& p) const {
    std::map<int, double> li_cache;
    double value = 0;
    double magnitude = 0;
    double err = 0;
    for (const auto& term : polylogs) {
      auto it = li_cache.find(term.order);
      if (it == li_cache.end()) {
        const NumericValue li = p.li(term.order, p.li_arg);
        it = li_cache.emplace(term.order, li.value).first;
        err += std::fabs(term.coef * std::pow(p.w, term.w_power)) * li.abs_error / (term.over_z ? std::fabs(p.z) : 1);
      }
      double x = term.coef * std::pow(p.w, term.w_power) * it->second;
      if (term.over_z) x /= p.z;
      value += x;
      magnitude += std::fabs(x);
    }
    for (const auto& term : monomials) {
      const double x = term.coef * std::pow(p.zw, term.zw_power) * std::pow(p.w, term.w_power) *
                       std::pow(p.L, term.log_power);
      value += x;
      magnitude += std::fabs(x);
    }
    return {value, err + 8 * DBL_EPSILON * magnitude};
  }
};

double d(const Rational& q) { return to_double(q); }

Plan plan_pos_neg(int k, int n) {
  Plan plan;
  if (k >= n) {
    const auto table = n >= 1 ? coefficient_table(Family::A, n) : nullptr;
    for (int l = 0; l <= n - 1; ++l)
      for (int j = 0; j <= n - l - 1; ++j) {
        const Rational a = table->at(l, j);
        if (a != 0) plan.polylogs.push_back({d(a), n - l + 1 - j, k - l, false});
      }
    plan.polylogs.push_back({1.0, 1, k - n, false});
    return plan;
  }
  const auto table = coefficient_table(Family::Aprime, n, k);
  for (int l = 0; l <= k; ++l)
    for (int j = 0; j <= n - l - 1; ++j) {
      const Rational a = table->at(l, j);
      if (a != 0) plan.polylogs.push_back({d(a), n - l + 1 - j, k - l, false});
    }
  return plan;
}

Plan plan_neg_pos(int n, int k) {
  Plan plan;
  for (int l = 0; l <= n + 1; ++l) {
    const Rational dl = d_coeff(n, l);
    if (dl == 0) continue;
    const int p = k - l;
    if (p >= 1) {
      plan.polylogs.push_back({d(dl), 0, p, true});
      continue;
    }
    // Li_{-q}(z) / z = (E_q(z) / z) w^{q+1} in powers of w^{-1} = 1 - z
    const int q = -p;
    const auto c = rebase_to_one_minus_z(eulerian_poly(q).divide_by_z_power(1));
    for (int j = 0; j <= c.degree(); ++j)
      if (c.coefficient(j) != 0) plan.monomials.push_back({d(dl * c.coefficient(j)), 0, q + 1 - j, 0});
  }
  return plan;
}

Plan plan_ones_stirling(int r, int n) {
  Plan plan;
  const auto table = coefficient_table(Family::E, n);
  for (int l = 1; l <= n + 1; ++l)
    for (int j = 0; j <= n; ++j) {
      const Rational e = table->at(l, j);
      if (e != 0) plan.monomials.push_back({d(e / Rational(factorial(r - l))), 0, n + 1 - j, r - l});
    }
  return plan;
}

// (z d/dz)^n applied to z (1-z)^{-1} L^{r-1} / (r-1)!, term by term in z^a (1-z)^{-b} L^c.
Plan plan_ones_derivative(int r, int n) {
  using Key = std::tuple<int, int, int>;
  std::map<Key, Rational> terms{{{1, 1, r - 1}, Rational(1) / Rational(factorial(r - 1))}};
  for (int step = 0; step < n; ++step) {
    std::map<Key, Rational> next;
    for (const auto& [key, coef] : terms) {
      const auto [a, b, c] = key;
      next[{a, b, c}] += coef * a;
      next[{a + 1, b + 1, c}] += coef * b;
      if (c > 0) next[{a + 1, b + 1, c - 1}] += coef * c;
    }
    terms.clear();
    for (auto& [key, coef] : next)
      if (coef != 0) terms.emplace(key, coef);
  }
  Plan plan;
  for (const auto& [key, coef] : terms) {
    const auto [a, b, c] = key;
    plan.monomials.push_back({d(coef), a - 1, b - a + 1, c});
  }
  return plan;
}

Plan plan_for(const SpecialFunctionRequest& request, OnesExpansion ones) {
  switch (request.kind) {
    case SpecialKind::eta_pos_neg:
    case SpecialKind::xitilde_pos_neg:
      return plan_pos_neg(request.k, request.n);
    case SpecialKind::eta_neg_pos:
    case SpecialKind::xi_neg_pos:
      return plan_neg_pos(request.n, request.k);
    case SpecialKind::eta_ones_neg:
      if (ones == OnesExpansion::stirling && request.r > request.n + 1) return plan_ones_stirling(request.r, request.n);
      return plan_ones_derivative(request.r, request.n);
  }
  throw std::logic_error("unhandled kind");
}

// Integrand of a request given its plan.
double evaluate_integrand(const SpecialFunctionRequest& request, const Plan& plan, double t) {
  if (t > kCutoffT) return 0.0;
  switch (request.kind) {
    case SpecialKind::eta_pos_neg:
    case SpecialKind::eta_neg_pos:
    case SpecialKind::eta_ones_neg:
      return plan.evaluate(eta_point(t)).value;
    case SpecialKind::xitilde_pos_neg: {
      const Point p = eta_point(t);
      return plan.evaluate(p).value / p.w;
    }
    case SpecialKind::xi_neg_pos:
      return plan.evaluate(xi_point(t)).value * std::exp(-t);
  }
  return 0.0;
}


}  // namespace

std::string to_string(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::eta_pos_neg: return "eta_pos_neg";
    case SpecialKind::eta_neg_pos: return "eta_neg_pos";
    case SpecialKind::eta_ones_neg: return "eta_ones_neg";
    case SpecialKind::xi_neg_pos: return "xi_neg_pos";
    case SpecialKind::xitilde_pos_neg: return "xitilde_pos_neg";
  }
  return "?";
}

SpecialFunctionRequest SpecialFunctionRequest::eta_pos_neg(int k, int n, double s) {
  return {SpecialKind::eta_pos_neg, k, n, 0, s};
}
SpecialFunctionRequest SpecialFunctionRequest::eta_neg_pos(int n, int k, double s) {
  return {SpecialKind::eta_neg_pos, k, n, 0, s};
}
SpecialFunctionRequest SpecialFunctionRequest::eta_ones_neg(int r, int n, double s) {
  return {SpecialKind::eta_ones_neg, 0, n, r, s};
}
SpecialFunctionRequest SpecialFunctionRequest::xi_neg_pos(int n, int k, double s) {
  return {SpecialKind::xi_neg_pos, k, n, 0, s};
}
SpecialFunctionRequest SpecialFunctionRequest::xitilde_pos_neg(int k, int n, double s) {
  return {SpecialKind::xitilde_pos_neg, k, n, 0, s};
}

SpecialFunctionRequest SpecialFunctionRequest::from_index(const std::string& function, const SignedIndex& index,
                                                          double s) {
  const bool two = index.depth() == 2;
  SpecialFunctionRequest request;
  if (function == "eta") {
    if (index.is_pos_neg())
      request = eta_pos_neg(index[0], -index[1], s);
    else if (index.is_neg_pos())
      request = eta_neg_pos(-index[0], index[1], s);
    else if (index.is_ones_neg())
      request = eta_ones_neg(index.depth(), -index[index.depth() - 1], s);
    else
      throw AdmissibilityError("η is available for the index patterns (k,-n), (-n,k) and (1,...,1,-n), got " +
                               index.to_string());
  } else if (function == "xi") {
    if (index.is_neg_pos())
      request = xi_neg_pos(-index[0], index[1], s);
    else if (two && index[0] >= 1 && index[1] < 0)
      throw AdmissibilityError("ξ(k,-n;s) does not converge for any s");
    else
      throw AdmissibilityError("ξ is available for the index pattern (-n,k) with k > n+1, got " + index.to_string());
  } else if (function == "xitilde") {
    if (index.is_pos_neg())
      request = xitilde_pos_neg(index[0], -index[1], s);
    else if (index.is_neg_pos())
      throw AdmissibilityError("ξ̃(-n,k;s) is not convergent for any s");
    else
      throw AdmissibilityError("ξ̃ is available for the index pattern (k,-n) with k < n, got " + index.to_string());
  } else {
    throw std::invalid_argument("unknown function '" + function + "' (expected eta|xi|xitilde)");
  }
  request.validate();
  return request;
}

void SpecialFunctionRequest::validate() const {
  if (!(s > 0)) throw AdmissibilityError("the integral representation needs s > 0");
  switch (kind) {
    case SpecialKind::eta_pos_neg:
      if (k < 1 || n < 0) throw AdmissibilityError("η(k,-n;s) requires k >= 1 and n >= 0");
      break;
    case SpecialKind::eta_neg_pos:
      if (k < 1 || n < 0) throw AdmissibilityError("η(-n,k;s) requires k >= 1 and n >= 0");
      break;
    case SpecialKind::eta_ones_neg:
      if (r < 1 || n < 0) throw AdmissibilityError("η({1}^{r-1},-n;s) requires r >= 1 and n >= 0");
      break;
    case SpecialKind::xi_neg_pos:
      if (n < 0 || k < 1) throw AdmissibilityError("ξ(-n,k;s) requires k >= 1 and n >= 0");
      if (k <= n + 1) throw AdmissibilityError("ξ(-n,k;s) requires k > n+1");
      break;
    case SpecialKind::xitilde_pos_neg:
      if (k < 1 || n < 0) throw AdmissibilityError("ξ̃(k,-n;s) requires k >= 1 and n >= 0");
      if (k >= n) throw AdmissibilityError("ξ̃ requires k < n");
      break;
  }
}

SignedIndex SpecialFunctionRequest::index() const {
  switch (kind) {
    case SpecialKind::eta_pos_neg:
    case SpecialKind::xitilde_pos_neg:
      return SignedIndex({k, -n});
    case SpecialKind::eta_neg_pos:
    case SpecialKind::xi_neg_pos:
      return SignedIndex({-n, k});
    case SpecialKind::eta_ones_neg: {
      std::vector<int> e(static_cast<std::size_t>(r), 1);
      e.back() = -n;
      return SignedIndex(std::move(e));
    }
  }
  throw std::logic_error("unhandled kind");
}

std::string SpecialFunctionRequest::describe() const {
  std::string name = kind == SpecialKind::xi_neg_pos ? "xi" : kind == SpecialKind::xitilde_pos_neg ? "xitilde" : "eta";
  std::string idx = index().to_string();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", s);
  return name + idx.substr(0, idx.size() - 1) + ";" + buf + ")";
}

NumericValue lemma_expansion_over_z(const SignedIndex& index, double z) {
  if (!(z > -1 && z < 1) || z == 0) throw std::domain_error("lemma expansion needs z in (-1, 1), z != 0");
  Plan plan;
  if (index.is_pos_neg())
    plan = plan_pos_neg(index[0], -index[1]);
  else if (index.is_neg_pos())
    plan = plan_neg_pos(-index[0], index[1]);
  else if (index.is_ones_neg())
    plan = index.depth() > -index[index.depth() - 1] + 1 ? plan_ones_stirling(index.depth(), -index[index.depth() - 1])
                                                         : plan_ones_derivative(index.depth(), -index[index.depth() - 1]);
  else
    throw std::invalid_argument("no expansion lemma for index " + index.to_string());
  return plan.evaluate(real_point(z));
}

double integrand(const SpecialFunctionRequest& request, double t, OnesExpansion ones) {
  request.validate();
  if (!(t > 0)) throw std::domain_error("integrand needs t > 0");
  return evaluate_integrand(request, plan_for(request, ones), t);
}

NumericValue quad_eval(const SpecialFunctionRequest& request, const QuadratureOptions& options, OnesExpansion ones) {
  request.validate();
  const Plan plan = plan_for(request, ones);
  const auto result =
      mellin_integral([&](double t) { return evaluate_integrand(request, plan, t); }, request.s, options);
  const NumericValue gamma = gamma_real(request.s);
  const double v = result.integral.value / gamma.value;
  const double err = result.integral.abs_error / gamma.value + std::fabs(v) * gamma.abs_error / gamma.value;
  return {v, err + std::fabs(v) * DBL_EPSILON};
}

namespace {

struct ClosedForm {
  bool integer_only;
  NumericValue (*eval)(double s);
};

NumericValue z(double s) { return zeta_num(s); }
NumericValue mz(int a, int b) { return mzv_num({a, b}); }

const std::map<std::string, ClosedForm>& registry() {
  static const std::map<std::string, ClosedForm> forms{
      {"eta_1_0", {false, [](double s) { return NumericValue{-s, 0.0}; }}},
      {"eta_0_1", {false, [](double s) { return NumericValue{1.0, 0.0} - z(s + 1) * s; }}},
      {"eta_neg1_1",
       {false,
        [](double s) {
          const double v = 0.25 * std::pow(2.0, 1 - s) - 0.5;
          return NumericValue{v, 4 * DBL_EPSILON * (std::fabs(v) + 1)};
        }}},
      {"eta_1_1_neg1",
       {false,
        [](double s) {
          const double v = (s + 1) * s / std::pow(2.0, s + 3) - s / std::pow(2.0, s + 1) + s;
          return NumericValue{v, 8 * DBL_EPSILON * (std::fabs(v) + std::fabs(s))};
        }}},
      {"xitilde_1_neg2",
       {false,
        [](double s) {
          const double v = -(s - 3) / std::pow(2.0, s) + s - 3;
          return NumericValue{v, 8 * DBL_EPSILON * (std::fabs(v) + std::fabs(s) + 3)};
        }}},
      {"eta_neg1_3",
       {true,
        [](double s) {
          const int m = static_cast<int>(s);
          return z(s + 2) * (-0.25 * (s * s + s + 2)) - mz(m, 2) * 0.5 + mz(1, m + 1) * (0.5 * s) + z(s + 1) * (0.5 * s);
        }}},
      {"xi_0_2",
       {true,
        [](double s) {
          const int m = static_cast<int>(s);
          return mz(1, m + 1) * s + z(s + 1) * s - mz(m, 2) - z(s + 2);
        }}},
      {"xi_neg1_3",
       {true,
        [](double s) {
          const int m = static_cast<int>(s);
          return (mz(1, m + 1) * s + z(s + 1) * s - mz(m, 2) - z(s + 2)) * 0.5;
        }}},
  };
  return forms;
}

}  // namespace

NumericValue closed_form_eval(const std::string& name, double s) {
  const auto& forms = registry();
  const auto it = forms.find(name);
  if (it == forms.end()) throw std::invalid_argument("unknown closed form '" + name + "'");
  if (!std::isfinite(s)) throw std::domain_error("closed form argument must be finite");
  if (it->second.integer_only && (s < 1 || s != std::floor(s)))
    throw std::domain_error("closed form '" + name + "' is registered for positive integer s only");
  return it->second.eval(s);
}

std::vector<std::string> closed_form_names() {
  std::vector<std::string> names;
  for (const auto& [name, form] : registry()) names.push_back(name);
  return names;
}

std::optional<std::string> closed_form_for(const SpecialFunctionRequest& request) {
  const int k = request.k, n = request.n;
  switch (request.kind) {
    case SpecialKind::eta_pos_neg:
      if (k == 1 && n == 0) return "eta_1_0";
      break;
    case SpecialKind::eta_neg_pos:
      if (n == 0 && k == 1) return "eta_0_1";
      if (n == 1 && k == 1) return "eta_neg1_1";
      if (n == 1 && k == 3) return "eta_neg1_3";
      break;
    case SpecialKind::eta_ones_neg:
      if (request.r == 3 && n == 1) return "eta_1_1_neg1";
      if (request.r == 2 && n == 0) return "eta_1_0";
      break;
    case SpecialKind::xi_neg_pos:
      if (n == 0 && k == 2) return "xi_0_2";
      if (n == 1 && k == 3) return "xi_neg1_3";
      break;
    case SpecialKind::xitilde_pos_neg:
      if (k == 1 && n == 2) return "xitilde_1_neg2";
      break;
  }
  return std::nullopt;
}

}  // namespace mixzeta
