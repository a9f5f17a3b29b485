#include "mixzeta/harness.hpp"

#include "mixzeta/coefficients.hpp"
#include "mixzeta/combinatorics.hpp"
#include "mixzeta/integrals.hpp"
#include "mixzeta/polybernoulli.hpp"
#include "mixzeta/theorems.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mixzeta {

namespace {

using json = nlohmann::json;
using R = SpecialFunctionRequest;

struct CaseSpec {
  std::string id;
  std::string description;
  std::string lhs_route;
  std::string rhs_route;
  double tolerance;
  std::function<std::pair<CaseValue, CaseValue>(const RunConfig&)> compute;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

double as_double(const CaseValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return to_double(*q);
  return std::get<NumericValue>(v).value;
}

double error_of(const CaseValue& v) {
  if (const auto* n = std::get_if<NumericValue>(&v)) return n->abs_error;
  return 0.0;
}

QuadratureOptions quad_options(const RunConfig& c) { return {c.quad_tol, c.quad_max_evaluations}; }

NumericValue quad(const R& request, const RunConfig& c) { return quad_eval(request, quad_options(c)); }

NumericValue z(double s) { return zeta_num(s); }

NumericValue constant(double v) { return {v, 0.0}; }

Rational flag(bool b) { return Rational(b ? 1 : 0); }

// sum_m c_m z^m from the defining nested sum, in floating point.
NumericValue direct_mpl_sum(const SignedIndex& index, double zv) {
  const auto& k = index.entries();
  constexpr int kMax = 6000;
  std::vector<double> prefix(k.size(), 0.0);
  double total = 0, last = 0, power = 1, magnitude = 0;
  for (int m = 1; m <= kMax; ++m) {
    power *= zv;
    // f_i(m) = m^{-k_i} sum_{m' < m} f_{i-1}(m'), updated innermost first
    double f = std::pow(static_cast<double>(m), -k[0]);
    for (std::size_t i = 1; i < k.size(); ++i) {
      const double next = std::pow(static_cast<double>(m), -k[i]) * prefix[i - 1];
      prefix[i - 1] += f;
      f = next;
    }
    prefix.back() += f;
    last = f * power;
    total += last;
    magnitude += std::fabs(last);
    if (m > 30 && std::fabs(last) < 1e-19 * (1 + std::fabs(total))) break;
  }
  return {total, 10 * std::fabs(last) + 1e-15 * magnitude};
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string prefix) : prefix_(std::move(prefix)) {}

  void add(const std::string& id, std::string description, std::string lhs_route, std::string rhs_route,
           double tolerance, std::function<std::pair<CaseValue, CaseValue>(const RunConfig&)> compute) {
    cases_.push_back({prefix_ + "/" + id, std::move(description), std::move(lhs_route), std::move(rhs_route),
                      tolerance, std::move(compute)});
  }

  std::vector<CaseSpec> take() { return std::move(cases_); }

 private:
  std::string prefix_;
  std::vector<CaseSpec> cases_;
};

constexpr double kUseConfig = -1.0;

std::vector<CaseSpec> coefficient_cases() {
  SuiteBuilder s("coefficients");
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= n - 1; ++l)
      for (int j = 0; j <= n - l - 1; ++j)
        s.add(fmt("A/n%d_l%d_j%d", n, l, j), fmt("A^(%d)_{%d,%d}", n, l, j), "closed-form", "rebase", 0,
              [=](const RunConfig&) {
                return std::pair<CaseValue, CaseValue>{a_coeff(n, l, j, CoefficientRoute::closed_form),
                                                       a_coeff(n, l, j, CoefficientRoute::rebase)};
              });
  for (int n = 0; n <= 6; ++n)
    for (int l = 1; l <= n + 1; ++l)
      for (int j = 0; j <= n; ++j)
        s.add(fmt("E/n%d_l%d_j%d", n, l, j), fmt("E^(%d)_{%d,%d}", n, l, j), "closed-form", "rebase", 0,
              [=](const RunConfig&) {
                return std::pair<CaseValue, CaseValue>{e_coeff(n, l, j, CoefficientRoute::closed_form),
                                                       e_coeff(n, l, j, CoefficientRoute::rebase)};
              });
  for (int n = 0; n <= 12; ++n)
    s.add(fmt("D/rowsum_n%02d", n), fmt("sum_l D^(%d)_l = 0", n), "D-table", "zero", 0, [=](const RunConfig&) {
      Rational sum = 0;
      for (int l = 0; l <= n + 1; ++l) sum += d_coeff(n, l);
      return std::pair<CaseValue, CaseValue>{sum, Rational(0)};
    });
  for (int n = 0; n <= 6; ++n)
    s.add(fmt("D/faulhaber_n%d", n), fmt("sum_l D^(%d)_l 7^l = sum_{m<7} m^%d", n, n), "D-table", "power-sum", 0,
          [=](const RunConfig&) {
            Rational lhs = 0, rhs = 0;
            for (int l = 0; l <= n + 1; ++l) lhs += d_coeff(n, l) * pow(Rational(7), l);
            for (int m = 1; m < 7; ++m) rhs += pow(Rational(m), n);
            return std::pair<CaseValue, CaseValue>{lhs, rhs};
          });
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i <= n - 1; ++i)
      s.add(fmt("P/n%d_i%d", n, i), fmt("P^(%d)_%d at z = 3/7", n, i), "eulerian", "double-sum", 0,
            [=](const RunConfig&) {
              const Rational x = make_rational(3, 7);
              return std::pair<CaseValue, CaseValue>{p_poly(n, i).evaluate(x), p_poly_double_sum(n, i).evaluate(x)};
            });
  for (int n = 0; n <= 6; ++n)
    for (int i = 1; i <= n + 1; ++i)
      s.add(fmt("Q/n%d_i%d", n, i), fmt("Q^(%d)_%d at z = -5/3", n, i), "stirling-sum", "product-form", 0,
            [=](const RunConfig&) {
              const Rational x = make_rational(-5, 3);
              return std::pair<CaseValue, CaseValue>{q_poly(n, i).evaluate(x), q_poly_product_form(n, i).evaluate(x)};
            });
  return s.take();
}

std::vector<CaseSpec> polybernoulli_cases() {
  SuiteBuilder s("polybernoulli");
  for (int m = 0; m <= 12; ++m) {
    s.add(fmt("B_1_0/m%02d", m), fmt("B_%d^(1,0) = m", m), "generating-function", "closed-form eta(1,0;-m)", 0,
          [=](const RunConfig&) {
            return std::pair<CaseValue, CaseValue>{poly_bernoulli_B(SignedIndex({1, 0}), m), Rational(m)};
          });
    s.add(fmt("B_neg1_1/m%02d", m), fmt("B_%d^(-1,1) = 2^(m-1) - 1/2", m), "generating-function",
          "closed-form eta(-1,1;-m)", 0, [=](const RunConfig&) {
            return std::pair<CaseValue, CaseValue>{poly_bernoulli_B(SignedIndex({-1, 1}), m),
                                                   pow(Rational(2), m - 1) - make_rational(1, 2)};
          });
    s.add(fmt("B_1_1_neg1/m%02d", m), fmt("B_%d^(1,1,-1) = m(m-1)2^(m-3) + m 2^(m-1) - m", m), "generating-function",
          "closed-form eta(1,1,-1;-m)", 0, [=](const RunConfig&) {
            const Rational mm(m);
            return std::pair<CaseValue, CaseValue>{
                poly_bernoulli_B(SignedIndex({1, 1, -1}), m),
                mm * (mm - 1) * pow(Rational(2), m - 3) + mm * pow(Rational(2), m - 1) - mm};
          });
    s.add(fmt("C_1_neg2/m%02d", m), fmt("C_%d^(1,-2) = (m+3)(2^m - 1)", m), "generating-function",
          "closed-form xitilde(1,-2;-m)", 0, [=](const RunConfig&) {
            return std::pair<CaseValue, CaseValue>{poly_bernoulli_C(SignedIndex({1, -2}), m),
                                                   Rational(m + 3) * (pow(Rational(2), m) - 1)};
          });
  }
  const std::vector<std::tuple<std::string, std::vector<int>, bool>> continued{
      {"eta_1_0", {1, 0}, true},
      {"eta_neg1_1", {-1, 1}, true},
      {"eta_1_1_neg1", {1, 1, -1}, true},
      {"xitilde_1_neg2", {1, -2}, false}};
  for (const auto& [name, idx, is_b] : continued)
    for (int m = 0; m <= 12; ++m)
      s.add(fmt("continuation/%s_m%02d", name.c_str(), m), fmt("%s at s = -%d", name.c_str(), m),
            is_b ? "B generating-function" : "C generating-function", "closed form " + name, kUseConfig,
            [name, idx, is_b, m](const RunConfig&) {
              const SignedIndex index(idx);
              const Rational exact = is_b ? poly_bernoulli_B(index, m) : poly_bernoulli_C(index, m);
              return std::pair<CaseValue, CaseValue>{exact, closed_form_eval(name, -m)};
            });
  for (int n = 0; n <= 20; ++n)
    s.add(fmt("sign/n%02d", n), fmt("B_%d^(1) = (-1)^n C_%d^(1)", n, n), "B", "signed C", 0, [=](const RunConfig&) {
      Rational c = poly_bernoulli_C(SignedIndex({1}), n);
      if (n % 2 == 1) c = -c;
      return std::pair<CaseValue, CaseValue>{poly_bernoulli_B(SignedIndex({1}), n), c};
    });
  for (const auto& idx : std::vector<std::vector<int>>{{1, 0}, {-2, 3}, {2, -1, 1}, {0, 0, 0, 0}})
    s.add("valuation/" + SignedIndex(idx).to_string(), "B_0 vanishes at depth >= 2", "generating-function", "zero", 0,
          [=](const RunConfig&) {
            return std::pair<CaseValue, CaseValue>{poly_bernoulli_B(SignedIndex(idx), 0), Rational(0)};
          });
  return s.take();
}

std::vector<CaseSpec> duality_cases() {
  SuiteBuilder s("duality");
  for (int k = 0; k <= 10; ++k)
    for (int m = 0; m <= 10; ++m)
      s.add(fmt("r1/k%02d_m%02d", k, m), fmt("B_%d^(-%d) = B_%d^(-%d)", m, k, k, m), "B", "swapped B", 0,
            [=](const RunConfig&) {
              return std::pair<CaseValue, CaseValue>{poly_bernoulli_B(SignedIndex({-k}), m),
                                                     poly_bernoulli_B(SignedIndex({-m}), k)};
            });
  for (int k1 = 0; k1 <= 4; ++k1)
    for (int k2 = 0; k2 <= 4; ++k2)
      for (int m = 0; m <= 4; ++m)
        s.add(fmt("r2/k%d_%d_m%d", k1, k2, m), fmt("B_%d^(-%d,-%d) = frakB^(-%d)_{%d,%d}", m, k1, k2, m, k1, k2), "B",
              "frakB r=2", 0, [=](const RunConfig&) {
                return std::pair<CaseValue, CaseValue>{poly_bernoulli_B(SignedIndex({-k1, -k2}), m),
                                                       kt_frakB_r2(k1, k2, m)};
              });
  return s.take();
}

std::vector<CaseSpec> lemma_cases() {
  SuiteBuilder s("lemmas");
  const std::vector<double> points{-0.8, -0.3, 0.4};
  auto add_lemma = [&](const std::string& tag, const SignedIndex& index) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      const double zv = points[p];
      s.add(fmt("%s/%s_z%zu", tag.c_str(), index.to_string().c_str(), p),
            "Li_" + index.to_string() + "(" + shortest(zv) + ")", "expansion lemma", "direct nested sum", 1e-8,
            [=](const RunConfig&) {
              return std::pair<CaseValue, CaseValue>{lemma_expansion_over_z(index, zv) * zv, direct_mpl_sum(index, zv)};
            });
    }
  };
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 2 && n <= k; ++n) add_lemma("P", SignedIndex({k, -n}));
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}})
    add_lemma("Pprime", SignedIndex({k, -n}));
  for (int n = 0; n <= 2; ++n)
    for (int k = 1; k <= 3; ++k) add_lemma("D", SignedIndex({-n, k}));
  for (int r = 2; r <= 4; ++r)
    for (int n = 0; n <= r + 1; ++n) {
      std::vector<int> e(static_cast<std::size_t>(r), 1);
      e.back() = -n;
      add_lemma(r > n + 1 ? "Q" : "derivative", SignedIndex(e));
    }
  for (int n = 0; n <= 8; ++n)
    for (double zv : {-0.5, 1.0 / 3.0})
      s.add(fmt("eulerian/n%d_z%s", n, zv < 0 ? "neg" : "pos"), fmt("E_%d(z)/(1-z)^(n+1) = sum m^n z^m", n),
            "eulerian", "direct sum", 1e-8, [=](const RunConfig&) {
              return std::pair<CaseValue, CaseValue>{polylog_num(-n, zv), direct_mpl_sum(SignedIndex({-n}), zv)};
            });
  return s.take();
}

std::vector<CaseSpec> theorem_cases() {
  SuiteBuilder s("theorems");
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n < k; ++n)
      for (int m = 0; m <= 2; ++m)
        s.add(fmt("eta_pos_neg/k%d_n%d_m%d", k, n, m), fmt("eta(%d,-%d;%d)", k, n, m + 1), "quadrature", "theorem",
              kUseConfig, [=](const RunConfig& c) {
                return std::pair<CaseValue, CaseValue>{quad(R::eta_pos_neg(k, n, m + 1), c), rhs_eta_pos_neg(k, n, m)};
              });
  for (int n = 0; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int m = 0; m <= 2; ++m)
        s.add(fmt("eta_neg_pos/n%d_k%d_m%d", n, k, m), fmt("eta(-%d,%d;%d)", n, k, m + 1), "quadrature", "theorem",
              kUseConfig, [=](const RunConfig& c) {
                return std::pair<CaseValue, CaseValue>{quad(R::eta_neg_pos(n, k, m + 1), c), rhs_eta_neg_pos(n, k, m)};
              });
  for (int r = 2; r <= 5; ++r)
    for (int n = 0; n < r - 1; ++n)
      for (int m = 0; m <= 3; ++m)
        s.add(fmt("eta_ones_neg/r%d_n%d_m%d", r, n, m), fmt("eta({1}^%d,-%d;%d)", r - 1, n, m + 1), "quadrature",
              "theorem (exact)", 1e-8, [=](const RunConfig& c) {
                return std::pair<CaseValue, CaseValue>{quad(R::eta_ones_neg(r, n, m + 1), c), rhs_eta_ones_neg(r, n, m)};
              });
  for (int n = 0; n <= 1; ++n)
    for (int k = n + 2; k <= 4; ++k)
      for (int m = 0; m <= 2; ++m)
        s.add(fmt("xi_neg_pos/n%d_k%d_m%d", n, k, m), fmt("xi(-%d,%d;%d)", n, k, m + 1), "quadrature", "theorem",
              kUseConfig, [=](const RunConfig& c) {
                return std::pair<CaseValue, CaseValue>{quad(R::xi_neg_pos(n, k, m + 1), c), rhs_xi_neg_pos(n, k, m)};
              });
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 0; m <= 2; ++m)
        s.add(fmt("xitilde_pos_neg/k%d_n%d_m%d", k, n, m), fmt("xitilde(%d,-%d;%d)", k, n, m + 1), "quadrature",
              "theorem", kUseConfig, [=](const RunConfig& c) {
                return std::pair<CaseValue, CaseValue>{quad(R::xitilde_pos_neg(k, n, m + 1), c),
                                                       rhs_xitilde_pos_neg(k, n, m)};
              });
  for (int r = 2; r <= 4; ++r)
    for (int n = 0; n < r - 1; ++n)
      s.add(fmt("ones_routes/r%d_n%d", r, n), fmt("eta({1}^%d,-%d;2.5) two expansions", r - 1, n),
            "quadrature (stirling)", "quadrature (derivative)", kUseConfig, [=](const RunConfig& c) {
              return std::pair<CaseValue, CaseValue>{
                  quad_eval(R::eta_ones_neg(r, n, 2.5), quad_options(c), OnesExpansion::stirling),
                  quad_eval(R::eta_ones_neg(r, n, 2.5), quad_options(c), OnesExpansion::derivative)};
            });
  const std::vector<std::pair<std::string, R>> forms{
      {"eta_1_0", R::eta_pos_neg(1, 0, 1)},        {"eta_0_1", R::eta_neg_pos(0, 1, 1)},
      {"eta_neg1_1", R::eta_neg_pos(1, 1, 1)},     {"eta_neg1_3", R::eta_neg_pos(1, 3, 1)},
      {"eta_1_1_neg1", R::eta_ones_neg(3, 1, 1)},  {"xi_0_2", R::xi_neg_pos(0, 2, 1)},
      {"xi_neg1_3", R::xi_neg_pos(1, 3, 1)},       {"xitilde_1_neg2", R::xitilde_pos_neg(1, 2, 1)}};
  for (const auto& [name, base] : forms)
    for (double sv : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      if (sv != std::floor(sv) && (name == "eta_neg1_3" || name == "xi_0_2" || name == "xi_neg1_3")) continue;
      R request = base;
      request.s = sv;
      s.add("closed_forms/" + name + "_s" + shortest(sv), request.describe() + " closed form", "quadrature",
            "closed form " + name, kUseConfig, [name, request](const RunConfig& c) {
              return std::pair<CaseValue, CaseValue>{quad(request, c), closed_form_eval(name, request.s)};
            });
    }
  for (int k = 1; k <= 3; ++k)
    for (int m = 0; m <= 2; ++m)
      s.add(fmt("depth_one/eta_vs_neg_pos/k%d_m%d", k, m), fmt("eta(0,%d;%d) via depth-one family", k + 1, m + 1),
            "quadrature", "depth-one family", kUseConfig, [=](const RunConfig& c) {
              // eta(0,k+1) = -eta(k+1) + eta(k): D^(0) = (-1, 1)
              const NumericValue rhs = depth_one_family(DepthOneKind::eta, 1, k, m) -
                                       depth_one_family(DepthOneKind::eta, 1, k + 1, m);
              return std::pair<CaseValue, CaseValue>{quad(R::eta_neg_pos(0, k + 1, m + 1), c), rhs};
            });
  return s.take();
}

std::vector<CaseSpec> reference_value_cases() {
  SuiteBuilder s("paper-examples");
  struct Value {
    std::string tag;
    std::string text;
    R request;
    std::function<NumericValue()> theorem;
    std::function<NumericValue()> reference;
  };
  const std::vector<Value> values{
      {"c1_eta_2_0_s1", "eta(2,0;1) = -zeta(2)", R::eta_pos_neg(2, 0, 1), [] { return rhs_eta_pos_neg(2, 0, 0); },
       [] { return z(2) * -1.0; }},
      {"c1_eta_2_0_s2", "eta(2,0;2) = -zeta(2) - 2 zeta(3)", R::eta_pos_neg(2, 0, 2),
       [] { return rhs_eta_pos_neg(2, 0, 1); }, [] { return z(2) * -1.0 - z(3) * 2.0; }},
      {"c1_eta_3_0_s1", "eta(3,0;1) = -2 zeta(3)", R::eta_pos_neg(3, 0, 1), [] { return rhs_eta_pos_neg(3, 0, 0); },
       [] { return z(3) * -2.0; }},
      {"c1_eta_2_neg1_s1", "eta(2,-1;1) = -1/2 - zeta(2)/2", R::eta_pos_neg(2, 1, 1),
       [] { return rhs_eta_pos_neg(2, 1, 0); }, [] { return constant(-0.5) - z(2) * 0.5; }},
      {"c1_eta_3_neg1_s1", "eta(3,-1;1) = -zeta(2)/2 - zeta(3)", R::eta_pos_neg(3, 1, 1),
       [] { return rhs_eta_pos_neg(3, 1, 0); }, [] { return z(2) * -0.5 - z(3); }},
      {"c2_eta_0_1_s1", "eta(0,1;1) = 1 - zeta(2)", R::eta_neg_pos(0, 1, 1), [] { return rhs_eta_neg_pos(0, 1, 0); },
       [] { return constant(1.0) - z(2); }},
      {"c2_eta_neg1_3_s1", "eta(-1,3;1) = zeta(2)/2 - zeta(3)", R::eta_neg_pos(1, 3, 1),
       [] { return rhs_eta_neg_pos(1, 3, 0); }, [] { return z(2) * 0.5 - z(3); }},
      {"c2_eta_neg1_1_s1", "eta(-1,1;1) = -1/4", R::eta_neg_pos(1, 1, 1), [] { return rhs_eta_neg_pos(1, 1, 0); },
       [] { return constant(-0.25); }},
      {"c3_eta_1_1_neg1_s1", "eta(1,1,-1;1) = 7/8", R::eta_ones_neg(3, 1, 1),
       [] { return NumericValue{to_double(rhs_eta_ones_neg(3, 1, 0)), 0.0}; }, [] { return constant(0.875); }},
      {"c4_xi_0_2_s1", "xi(0,2;1) = zeta(2) - zeta(3)", R::xi_neg_pos(0, 2, 1), [] { return rhs_xi_neg_pos(0, 2, 0); },
       [] { return z(2) - z(3); }},
      {"c4_xi_neg1_3_s1", "xi(-1,3;1) = (zeta(2) - zeta(3))/2", R::xi_neg_pos(1, 3, 1),
       [] { return rhs_xi_neg_pos(1, 3, 0); }, [] { return (z(2) - z(3)) * 0.5; }},
      {"c5_xitilde_1_neg2_s1", "xitilde(1,-2;1) = -1", R::xitilde_pos_neg(1, 2, 1),
       [] { return rhs_xitilde_pos_neg(1, 2, 0); }, [] { return constant(-1.0); }},
      {"c5_xitilde_2_neg3_s1", "xitilde(2,-3;1) = -1", R::xitilde_pos_neg(2, 3, 1),
       [] { return rhs_xitilde_pos_neg(2, 3, 0); }, [] { return constant(-1.0); }},
      {"c5_xitilde_3_neg4_s1", "xitilde(3,-4;1) = -1", R::xitilde_pos_neg(3, 4, 1),
       [] { return rhs_xitilde_pos_neg(3, 4, 0); }, [] { return constant(-1.0); }},
  };
  for (const auto& v : values) {
    s.add(v.tag + "/quadrature", v.text, "quadrature", "reference value", kUseConfig, [v](const RunConfig& c) {
      return std::pair<CaseValue, CaseValue>{quad(v.request, c), v.reference()};
    });
    s.add(v.tag + "/theorem", v.text, "theorem", "reference value", kUseConfig,
          [v](const RunConfig&) { return std::pair<CaseValue, CaseValue>{v.theorem(), v.reference()}; });
    if (const auto name = closed_form_for(v.request))
      s.add(v.tag + "/closed-form", v.text, "closed form " + *name, "reference value", kUseConfig,
            [v, name = *name](const RunConfig&) {
              return std::pair<CaseValue, CaseValue>{closed_form_eval(name, v.request.s), v.reference()};
            });
  }
  for (int m = 0; m <= 4; ++m)
    s.add(fmt("c2_eta_0_1_family/m%d", m), fmt("eta(0,1;%d) = -(m+1) zeta(m+2) + 1", m + 1), "theorem",
          "closed form eta_0_1", kUseConfig, [=](const RunConfig&) {
            return std::pair<CaseValue, CaseValue>{rhs_eta_neg_pos(0, 1, m), closed_form_eval("eta_0_1", m + 1)};
          });
  s.add("c2_eta_0_1_printed_sum/m1",
        "the sum printed without the (a+1) factor differs from -s zeta(s+1) + 1 at s = 2 by more than 0.05",
        "indicator |(-zeta(3) + 1) - closed form| > 0.05", "1", 0, [](const RunConfig&) {
          const double printed = 1.0 - z(3).value;
          const double closed = closed_form_eval("eta_0_1", 2).value;
          return std::pair<CaseValue, CaseValue>{flag(std::fabs(printed - closed) > 0.05), Rational(1)};
        });
  for (int m = 0; m <= 8; ++m)
    s.add(fmt("c3_eta_1_1_neg1_exact/m%d", m), fmt("eta(1,1,-1;%d) exact", m + 1), "theorem (exact)",
          "closed expression", 0, [=](const RunConfig&) {
            const Rational mm(m);
            const Rational expression = (mm + 2) * (mm + 1) / Rational(2) * pow(Rational(2), -(m + 3)) -
                                     (mm + 1) * pow(Rational(2), -(m + 2)) + mm + 1;
            return std::pair<CaseValue, CaseValue>{rhs_eta_ones_neg(3, 1, m), expression};
          });
  for (int m = 0; m <= 3; ++m)
    s.add(fmt("c3_eta_1_1_neg1_quadrature/m%d", m), fmt("eta(1,1,-1;%d)", m + 1), "quadrature", "theorem (exact)",
          1e-8, [=](const RunConfig& c) {
            return std::pair<CaseValue, CaseValue>{quad(R::eta_ones_neg(3, 1, m + 1), c), rhs_eta_ones_neg(3, 1, m)};
          });
  for (auto [n, k] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}})
    s.add(fmt("c4_xi_neg%d_%d/m1", n, k), fmt("xi(-%d,%d;2)", n, k), "quadrature", "theorem", kUseConfig,
          [n, k](const RunConfig& c) {
            return std::pair<CaseValue, CaseValue>{quad(R::xi_neg_pos(n, k, 2), c), rhs_xi_neg_pos(n, k, 1)};
          });
  for (double sv : {0.5, 1.0, 2.0, 3.0})
    s.add("c5_xitilde_1_neg2_closed/s" + shortest(sv), "xitilde(1,-2;s) = -(s-3)/2^s + s - 3", "quadrature",
          "closed form xitilde_1_neg2", 1e-8, [=](const RunConfig& c) {
            return std::pair<CaseValue, CaseValue>{quad(R::xitilde_pos_neg(1, 2, sv), c),
                                                   closed_form_eval("xitilde_1_neg2", sv)};
          });
  for (ZetaRoute route : {ZetaRoute::holder, ZetaRoute::nested}) {
    const std::string rname = route == ZetaRoute::holder ? "holder" : "nested";
    auto opts = [route](const RunConfig& c) { return ZetaOptions{route, c.zeta_tol, c.nested_cutoff}; };
    s.add("c6_mzsv_1_2/" + rname, "zeta*(1,2) = 2 zeta(3)", "mzsv " + rname, "2 zeta(3)", 1e-8,
          [=](const RunConfig& c) { return std::pair<CaseValue, CaseValue>{mzsv_num({1, 2}, opts(c)), z(3) * 2.0}; });
    s.add("c6_mzv_1_2/" + rname, "zeta(1,2) = zeta(3)", "mzv " + rname, "zeta(3)", 1e-8,
          [=](const RunConfig& c) { return std::pair<CaseValue, CaseValue>{mzv_num({1, 2}, opts(c)), z(3)}; });
    s.add("c6_mhzsv_1_2_shift2/" + rname, "zeta*(1,2;{2}^2) = 2 zeta(3) - zeta(2)", "mhzsv " + rname,
          "2 zeta(3) - zeta(2)", 1e-7, [=](const RunConfig& c) {
            return std::pair<CaseValue, CaseValue>{mhzsv_num(HurwitzStarArgs::uniform({1, 2}, 2), opts(c)),
                                                   z(3) * 2.0 - z(2)};
          });
  }
  auto exact_entry = [&](const std::string& tag, const std::string& text, std::function<Rational()> f, Rational want) {
    s.add("c7_" + tag, text, "coefficient table", "reference value", 0,
          [f, want](const RunConfig&) { return std::pair<CaseValue, CaseValue>{f(), want}; });
  };
  exact_entry("D0/l0", "D^(0)_0 = -1", [] { return d_coeff(0, 0); }, Rational(-1));
  exact_entry("D0/l1", "D^(0)_1 = 1", [] { return d_coeff(0, 1); }, Rational(1));
  exact_entry("D1/l0", "D^(1)_0 = 0", [] { return d_coeff(1, 0); }, Rational(0));
  exact_entry("D1/l1", "D^(1)_1 = -1/2", [] { return d_coeff(1, 1); }, make_rational(-1, 2));
  exact_entry("D1/l2", "D^(1)_2 = 1/2", [] { return d_coeff(1, 2); }, make_rational(1, 2));
  exact_entry("A1/l0_j0", "A^(1)_{0,0} = 1", [] { return a_coeff(1, 0, 0); }, Rational(1));
  const std::vector<std::tuple<int, int, int>> e1{{1, 0, 1}, {1, 1, 0}, {2, 0, 1}, {2, 1, -1}};
  for (auto [l, j, v] : e1)
    exact_entry(fmt("E1/l%d_j%d", l, j), fmt("E^(1)_{%d,%d} = %d", l, j, v), [l, j] { return e_coeff(1, l, j); },
                Rational(v));
  const std::vector<std::tuple<int, int, int>> a2{{0, 0, 2}, {0, 1, -1}, {1, 0, 3}};
  for (auto [l, j, v] : a2)
    exact_entry(fmt("Aprime2/l%d_j%d", l, j), fmt("A'^(2)_{%d,%d} = %d", l, j, v),
                [l, j] { return aprime_coeff(2, 1, l, j); }, Rational(v));
  const std::vector<std::tuple<int, int, int>> a4{{0, 0, 24}, {0, 1, -36}, {0, 2, 14}, {0, 3, -1}, {1, 0, 24},
                                                  {1, 1, -24}, {1, 2, 4},  {2, 0, 12}, {2, 1, -6}, {3, 0, 5}};
  for (auto [l, j, v] : a4)
    exact_entry(fmt("Aprime4/l%d_j%d", l, j), fmt("A'^(4)_{%d,%d} = %d", l, j, v),
                [l, j] { return aprime_coeff(4, 3, l, j); }, Rational(v));
  s.add("c11_ones_exponent/implemented", "exponent m+r-l+1 gives eta(1,1,-1;1) = 7/8", "theorem (exact)", "7/8", 0,
        [](const RunConfig&) {
          return std::pair<CaseValue, CaseValue>{rhs_eta_ones_neg(3, 1, 0), make_rational(7, 8)};
        });
  s.add("c11_ones_exponent/rejected", "exponent m+r-l misses 7/8 by more than 0.05",
        "indicator |as-printed - 7/8| > 0.05", "1", 0, [](const RunConfig&) {
          const Rational printed = rhs_eta_ones_neg(3, 1, 0, OnesExponent::as_printed);
          return std::pair<CaseValue, CaseValue>{flag(std::fabs(to_double(printed - make_rational(7, 8))) > 0.05),
                                                 Rational(1)};
        });
  s.add("c11_xitilde_base/implemented", "base n-l-j gives xitilde(2,-3;1) = -1", "theorem", "-1", kUseConfig,
        [](const RunConfig&) { return std::pair<CaseValue, CaseValue>{rhs_xitilde_pos_neg(2, 3, 0), Rational(-1)}; });
  s.add("c11_xitilde_base/rejected", "base n-l-j+1 misses xitilde(2,-3;1) = -1 by more than 0.05",
        "indicator |proof variant + 1| > 0.05", "1", 0, [](const RunConfig&) {
          const double v = rhs_xitilde_pos_neg(2, 3, 0, XitildeBase::proof).value;
          return std::pair<CaseValue, CaseValue>{flag(std::fabs(v + 1.0) > 0.05), Rational(1)};
        });
  return s.take();
}

std::vector<CaseSpec> cases_for(const std::string& name) {
  if (name == "coefficients") return coefficient_cases();
  if (name == "polybernoulli") return polybernoulli_cases();
  if (name == "lemmas") return lemma_cases();
  if (name == "theorems") return theorem_cases();
  if (name == "paper-examples") return reference_value_cases();
  if (name == "duality") return duality_cases();
  if (name == "all") {
    std::vector<CaseSpec> all;
    for (const auto& suite : suite_names())
      if (suite != "all")
        for (auto& c : cases_for(suite)) all.push_back(std::move(c));
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

CaseRecord execute(const CaseSpec& spec, const RunConfig& config) {
  CaseRecord record;
  record.case_id = spec.id;
  record.description = spec.description;
  record.lhs_route = spec.lhs_route;
  record.rhs_route = spec.rhs_route;
  record.tolerance = spec.tolerance == kUseConfig ? config.tolerance : spec.tolerance;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [lhs, rhs] = spec.compute(config);
    record.lhs = std::move(lhs);
    record.rhs = std::move(rhs);
    record.pass = values_agree(record.lhs, record.rhs, record.tolerance);
  } catch (const std::exception& e) {
    record.description += " [error: " + std::string(e.what()) + "]";
    record.lhs = NumericValue{std::nan(""), 0.0};
    record.rhs = NumericValue{std::nan(""), 0.0};
    record.pass = false;
  }
  record.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return record;
}

json value_to_json(const CaseValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return to_string(*q);
  const auto& n = std::get<NumericValue>(v);
  return json{{"value", n.value}, {"abs_error", n.abs_error}};
}

CaseValue value_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object()) {
    const auto num = [](const json& x) { return x.is_null() ? std::nan("") : x.get<double>(); };
    return NumericValue{num(j.at("value")), num(j.at("abs_error"))};
  }
  throw std::invalid_argument("report value must be a \"p/q\" string or a {value, abs_error} object");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(const CaseValue& value) {
  if (const auto* q = std::get_if<Rational>(&value)) return to_string(*q);
  const auto& n = std::get<NumericValue>(value);
  return shortest(n.value) + " +/- " + shortest(n.abs_error);
}

bool values_agree(const CaseValue& lhs, const CaseValue& rhs, double tolerance) {
  const auto* a = std::get_if<Rational>(&lhs);
  const auto* b = std::get_if<Rational>(&rhs);
  if (a && b) return *a == *b;
  const double diff = std::fabs(as_double(lhs) - as_double(rhs));
  return diff <= tolerance + error_of(lhs) + error_of(rhs);
}

void RunConfig::set(const std::string& key, const std::string& value) {
  auto to_double_checked = [&](const std::string& v) {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("bad number for " + key + ": " + v);
    return x;
  };
  auto to_long_checked = [&](const std::string& v) {
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument("bad integer for " + key + ": " + v);
    return x;
  };
  try {
    if (key == "tolerance") tolerance = to_double_checked(value);
    else if (key == "quad_tol") quad_tol = to_double_checked(value);
    else if (key == "quad_max_evaluations") quad_max_evaluations = static_cast<int>(to_long_checked(value));
    else if (key == "zeta_tol") zeta_tol = to_double_checked(value);
    else if (key == "nested_cutoff") nested_cutoff = to_long_checked(value);
    else if (key == "suite") suite = value;
    else if (key == "jobs") jobs = static_cast<int>(to_long_checked(value));
    else if (key == "report") report = value;
    else if (key == "format") format = value;
    else throw std::invalid_argument("unknown configuration key '" + key + "'");
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) && std::string(e.what()).find(key) != std::string::npos) throw;
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
}

void RunConfig::validate() const {
  if (!(tolerance >= 0)) throw std::invalid_argument("tolerance must be nonnegative");
  if (!(quad_tol > 0)) throw std::invalid_argument("quad_tol must be positive");
  if (quad_max_evaluations < 50) throw std::invalid_argument("quad_max_evaluations must be at least 50");
  if (!(zeta_tol > 0)) throw std::invalid_argument("zeta_tol must be positive");
  if (nested_cutoff < 10) throw std::invalid_argument("nested_cutoff must be at least 10");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  parse_report_format(format);
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read configuration file " + path);
  RunConfig config;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(number) + ": expected key=value");
    config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

std::vector<std::pair<std::string, std::string>> RunConfig::key_values() const {
  return {{"tolerance", shortest(tolerance)},
          {"quad_tol", shortest(quad_tol)},
          {"quad_max_evaluations", std::to_string(quad_max_evaluations)},
          {"zeta_tol", shortest(zeta_tol)},
          {"nested_cutoff", std::to_string(nested_cutoff)},
          {"suite", suite},
          {"jobs", std::to_string(jobs)},
          {"report", report},
          {"format", format}};
}

std::string resolve_report_path(const RunConfig& config) {
  if (!config.report.empty()) return config.report;
  const char* dir = std::getenv(kReportDirEnv);
  const std::filesystem::path base = dir && *dir ? dir : ".";
  return (base / ("report-" + config.suite + "." + config.format)).string();
}

std::vector<std::string> suite_names() {
  return {"coefficients", "polybernoulli", "lemmas", "theorems", "paper-examples", "duality", "all"};
}

std::vector<CaseRecord> run_suite(const std::string& name, const RunConfig& config) {
  config.validate();
  auto specs = cases_for(name);
  std::vector<CaseRecord> records(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) records[i] = execute(specs[i], config);
  };
  const int threads = std::min<int>(config.jobs, static_cast<int>(specs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(records.begin(), records.end(),
            [](const CaseRecord& a, const CaseRecord& b) { return a.case_id < b.case_id; });
  return records;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + name + "' (expected json|csv)");
}

std::string format_report(const std::vector<CaseRecord>& records, ReportFormat format) {
  if (format == ReportFormat::json) {
    json out = json::array();
    for (const auto& r : records)
      out.push_back({{"case_id", r.case_id},
                     {"description", r.description},
                     {"lhs_route", r.lhs_route},
                     {"rhs_route", r.rhs_route},
                     {"lhs", value_to_json(r.lhs)},
                     {"rhs", value_to_json(r.rhs)},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass},
                     {"runtime_ms", r.runtime_ms}});
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "case_id,description,lhs_route,rhs_route,lhs,rhs,tolerance,pass,runtime_ms\n";
  for (const auto& r : records)
    out << csv_escape(r.case_id) << ',' << csv_escape(r.description) << ',' << csv_escape(r.lhs_route) << ','
        << csv_escape(r.rhs_route) << ',' << csv_escape(to_string(r.lhs)) << ',' << csv_escape(to_string(r.rhs)) << ','
        << shortest(r.tolerance) << ',' << (r.pass ? "true" : "false") << ',' << r.runtime_ms << '\n';
  return out.str();
}

void emit_report(const std::vector<CaseRecord>& records, ReportFormat format, const std::string& path,
                 const RunConfig& config) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report " + path);
  out << format_report(records, format);
  if (!out) throw std::runtime_error("failed writing report " + path);
  std::ofstream cfg(path + ".config");
  if (!cfg) throw std::runtime_error("cannot write " + path + ".config");
  for (const auto& [k, v] : config.key_values()) cfg << k << '=' << v << '\n';
}

std::vector<CaseRecord> parse_json_report(const std::string& text) {
  const json doc = json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("report must be a JSON array");
  std::vector<CaseRecord> records;
  for (const auto& j : doc) {
    CaseRecord r;
    r.case_id = j.at("case_id").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.lhs_route = j.at("lhs_route").get<std::string>();
    r.rhs_route = j.at("rhs_route").get<std::string>();
    r.lhs = value_from_json(j.at("lhs"));
    r.rhs = value_from_json(j.at("rhs"));
    r.tolerance = j.at("tolerance").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.runtime_ms = j.at("runtime_ms").get<long>();
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace mixzeta
