#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixzeta/integrals.hpp"
#include "mixzeta/polybernoulli.hpp"

#include <cmath>

using namespace mixzeta;
using R = SpecialFunctionRequest;

namespace {

const double kZeta2 = 1.6449340668482264365;
const double kZeta3 = 1.2020569031595942854;

// Li_index(z) from exact series coefficients, evaluated in floating point.
double series_value(const SignedIndex& index, double z, int degree) {
  const auto c = mpl_coeffs(index, degree);
  double sum = 0;
  for (int m = degree; m >= 1; --m) sum = (sum + to_double(c[static_cast<std::size_t>(m)])) * z;
  return sum;
}

std::string admissibility_message(const std::string& fn, const std::string& index) {
  try {
    R::from_index(fn, SignedIndex::parse(index), 1.0).validate();
  } catch (const AdmissibilityError& e) {
    return e.what();
  }
  return "";
}

std::vector<R> acceptance_requests() {
  return {R::eta_pos_neg(2, 0, 1), R::eta_pos_neg(2, 0, 2), R::eta_pos_neg(3, 0, 1), R::eta_pos_neg(2, 1, 1),
          R::eta_pos_neg(3, 1, 1), R::eta_neg_pos(0, 1, 1), R::eta_neg_pos(1, 3, 1), R::eta_neg_pos(1, 1, 1),
          R::eta_ones_neg(3, 1, 1), R::xi_neg_pos(0, 2, 1), R::xi_neg_pos(1, 3, 1), R::xitilde_pos_neg(1, 2, 1),
          R::xitilde_pos_neg(2, 3, 1), R::xitilde_pos_neg(3, 4, 1)};
}

}  // namespace

TEST_CASE("classification and admissibility") {
  CHECK(R::from_index("eta", SignedIndex::parse("2,-1"), 1).kind == SpecialKind::eta_pos_neg);
  CHECK(R::from_index("eta", SignedIndex::parse("-1,3"), 1).kind == SpecialKind::eta_neg_pos);
  CHECK(R::from_index("eta", SignedIndex::parse("1,1,-1"), 1).kind == SpecialKind::eta_ones_neg);
  CHECK(R::from_index("xi", SignedIndex::parse("0,2"), 1).kind == SpecialKind::xi_neg_pos);
  CHECK(R::from_index("xitilde", SignedIndex::parse("1,-2"), 1).kind == SpecialKind::xitilde_pos_neg);
  CHECK(admissibility_message("xitilde", "3,-2").find("requires k < n") != std::string::npos);
  CHECK(admissibility_message("xitilde", "2,-2").find("requires k < n") != std::string::npos);
  CHECK(admissibility_message("xi", "-1,2").find("requires k > n+1") != std::string::npos);
  CHECK(admissibility_message("xi", "2,-1").find("does not converge") != std::string::npos);
  CHECK(admissibility_message("xitilde", "-1,2").find("not convergent") != std::string::npos);
  CHECK(admissibility_message("eta", "2,-1").empty());
  CHECK_THROWS_AS(R::from_index("zeta", SignedIndex::parse("2"), 1), std::invalid_argument);
  CHECK_THROWS_AS(R::from_index("eta", SignedIndex::parse("2,3"), 1), std::invalid_argument);
  CHECK_THROWS_AS(R::eta_pos_neg(2, 1, 0).validate(), AdmissibilityError);
  CHECK(R::eta_pos_neg(2, 1, 1).describe() == "eta(2,-1;1)");
  CHECK(R::eta_ones_neg(3, 1, 2).index() == SignedIndex({1, 1, -1}));
}

TEST_CASE("expansion lemmas against series") {
  std::vector<SignedIndex> indices;
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 2 && n <= k; ++n) indices.push_back(SignedIndex({k, -n}));
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}})
    indices.push_back(SignedIndex({k, -n}));
  for (int n = 0; n <= 2; ++n)
    for (int k = 1; k <= 3; ++k) indices.push_back(SignedIndex({-n, k}));
  for (int r = 2; r <= 4; ++r)
    for (int n = 0; n <= r + 1; ++n) {
      std::vector<int> e(static_cast<std::size_t>(r), 1);
      e.back() = -n;
      indices.push_back(SignedIndex(e));
    }
  for (const auto& index : indices)
    for (double z : {-0.8, -0.3, 0.4}) {
      INFO(index.to_string() << " at " << z);
      const int degree = std::fabs(z) > 0.5 ? 220 : 60;
      CHECK(std::fabs(lemma_expansion_over_z(index, z).value * z - series_value(index, z, degree)) <= 1e-8);
    }
}

TEST_CASE("runs of ones") {
  for (int j = 1; j <= 4; ++j)
    for (double z : {-0.6, 0.35}) {
      const double closed = std::pow(-std::log1p(-z), j) / std::tgamma(j + 1);
      CHECK(series_value(SignedIndex(std::vector<int>(static_cast<std::size_t>(j), 1)), z, 200) ==
            doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("integrand") {
  CHECK(integrand(R::eta_pos_neg(1, 0, 1), 1.0) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-14));
  for (const auto& r : acceptance_requests()) {
    INFO(r.describe());
    const double a = integrand(r, 1e-6), b = integrand(r, 1e-8);
    CHECK(std::isfinite(a));
    CHECK(a == doctest::Approx(b).epsilon(1e-4));
  }
  const R xt = R::xitilde_pos_neg(1, 2, 1);
  CHECK(std::isfinite(integrand(xt, 30.0)));
  CHECK(std::fabs(integrand(xt, 30.0)) <= std::fabs(integrand(xt, 5.0)) + 1e-12);
}

TEST_CASE("two expansions of the ones family agree") {
  for (int r = 2; r <= 5; ++r)
    for (int n = 0; n < r - 1; ++n)
      for (double t : {0.05, 0.7, 3.0, 12.0}) {
        const R req = R::eta_ones_neg(r, n, 1);
        INFO(req.describe() << " t=" << t);
        CHECK(integrand(req, t, OnesExpansion::stirling) ==
              doctest::Approx(integrand(req, t, OnesExpansion::derivative)).epsilon(1e-10));
      }
}

TEST_CASE("quadrature values") {
  CHECK(quad_eval(R::eta_pos_neg(2, 1, 1)).value == doctest::Approx(-0.5 - kZeta2 / 2).epsilon(1e-10));
  CHECK(quad_eval(R::eta_ones_neg(3, 1, 1)).value == doctest::Approx(0.875).epsilon(1e-10));
  CHECK(quad_eval(R::xitilde_pos_neg(3, 4, 1)).value == doctest::Approx(-1).epsilon(1e-10));
  CHECK(quad_eval(R::xi_neg_pos(0, 2, 1)).value == doctest::Approx(kZeta2 - kZeta3).epsilon(1e-10));
  for (const auto& r : acceptance_requests()) CHECK(quad_eval(r).abs_error <= 1e-8);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_eval("eta_1_0", 1.5).value == -1.5);
  CHECK(closed_form_eval("eta_0_1", 1).value == doctest::Approx(1 - kZeta2).epsilon(1e-14));
  CHECK(closed_form_eval("xitilde_1_neg2", 1).value == doctest::Approx(-1).epsilon(1e-14));
  CHECK(closed_form_names().size() == 8);
  CHECK(*closed_form_for(R::eta_neg_pos(1, 3, 1)) == "eta_neg1_3");
  CHECK_FALSE(closed_form_for(R::eta_pos_neg(3, 1, 1)).has_value());
  CHECK_THROWS(closed_form_eval("xi_0_2", 1.5));
  CHECK_THROWS(closed_form_eval("nope", 1));
  for (const auto& name : closed_form_names())
    for (double s : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      if (s != std::floor(s) && (name == "eta_neg1_3" || name == "xi_0_2" || name == "xi_neg1_3")) continue;
      for (const auto& r : acceptance_requests()) {
        if (closed_form_for(r) != name) continue;
        R at = r;
        at.s = s;
        INFO(at.describe());
        CHECK(quad_eval(at).agrees_with(closed_form_eval(name, s), 1e-9));
      }
    }
}

TEST_CASE("integrand tails are negligible") {
  for (const auto& r : acceptance_requests()) {
    INFO(r.describe());
    const double tail = std::fabs(integrand(r, 40.0) * std::pow(40.0, r.s - 1));
    CHECK(tail <= 1e-12 * std::fabs(quad_eval(r).value));
  }
}

TEST_CASE("values are continuous in s") {
  for (const auto& r : acceptance_requests()) {
    R lo = r, hi = r;
    lo.s -= 1e-3;
    hi.s += 1e-3;
    const double mid = quad_eval(r).value;
    INFO(r.describe());
    CHECK(std::fabs(quad_eval(lo).value - mid) <= 1e-2);
    CHECK(std::fabs(quad_eval(hi).value - mid) <= 1e-2);
    CHECK(std::fabs(quad_eval(lo).value + quad_eval(hi).value - 2 * mid) <= 1e-4);
  }
}
