#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixzeta/integrals.hpp"
#include "mixzeta/theorems.hpp"

#include <cmath>

using namespace mixzeta;
using R = SpecialFunctionRequest;

namespace {

const double kZeta2 = 1.6449340668482264365;
const double kZeta3 = 1.2020569031595942854;

double zeta(int s) { return zeta_num(s).value; }

}  // namespace

TEST_CASE("compositions") {
  CHECK(compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
  CHECK(compositions(2, 1) == std::vector<std::vector<int>>{{2}});
  CHECK(compositions(1, 2) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  for (int m = 0; m <= 6; ++m)
    for (int parts = 1; parts <= 4; ++parts) {
      const auto all = compositions(m, parts);
      long want = 1;
      for (int i = 1; i < parts; ++i) want = want * (m + i) / i;
      CHECK(static_cast<long>(all.size()) == want);
    }
}

TEST_CASE("block integrals against quadrature") {
  for (int p = 0; p <= 3; ++p)
    for (int c = 1; c <= 3; ++c)
      for (int m = 0; m <= 2; ++m) {
        auto f = [p, c](double t) { return std::exp(-c * t) * polylog_one_minus_exp_plus(p, t).value; };
        const auto q = mellin_integral(f, m + 1);
        const double want = q.integral.value / std::tgamma(m + 1);
        INFO("p=" << p << " c=" << c << " m=" << m);
        CHECK(block_integral(p, c, m).value == doctest::Approx(want).epsilon(1e-9));
      }
}

TEST_CASE("eta with positive then nonpositive entry") {
  CHECK(rhs_eta_pos_neg(2, 1, 0).value == doctest::Approx(-0.5 - kZeta2 / 2).epsilon(1e-12));
  CHECK(rhs_eta_pos_neg(3, 0, 0).value == doctest::Approx(-2 * kZeta3).epsilon(1e-12));
  const double star = mhzsv_num(HurwitzStarArgs::uniform({1, 2}, 2)).value;
  CHECK(rhs_eta_pos_neg(3, 1, 0).value == doctest::Approx(-0.5 * star - kZeta2).epsilon(1e-12));
  CHECK(rhs_eta_pos_neg(3, 1, 0).value == doctest::Approx(-2.0245239365837).epsilon(1e-12));
  for (int m = 0; m <= 4; ++m)
    CHECK(rhs_eta_pos_neg(2, 1, m).value ==
          doctest::Approx(quad_eval(R::eta_pos_neg(2, 1, m + 1)).value).epsilon(1e-9));
  CHECK_THROWS_AS(rhs_eta_pos_neg(2, 2, 0), std::domain_error);
}

TEST_CASE("eta with nonpositive then positive entry") {
  for (int m = 0; m <= 4; ++m) {
    CHECK(rhs_eta_neg_pos(0, 1, m).value == doctest::Approx(-(m + 1) * zeta(m + 2) + 1).epsilon(1e-12));
    CHECK(rhs_eta_neg_pos(1, 1, m).value == doctest::Approx(std::pow(2.0, -m - 2) - 0.5).epsilon(1e-12));
  }
  CHECK(rhs_eta_neg_pos(1, 3, 0).value == doctest::Approx(kZeta2 / 2 - kZeta3).epsilon(1e-12));
  CHECK_THROWS_AS(rhs_eta_neg_pos(0, 0, 0), std::domain_error);
}

TEST_CASE("eta with a run of ones is exact") {
  for (int m = 0; m <= 8; ++m) {
    const Rational mm(m);
    const Rational want = (mm + 2) * (mm + 1) * pow(Rational(2), -(m + 4)) - (mm + 1) * pow(Rational(2), -(m + 2)) + mm + 1;
    CHECK(rhs_eta_ones_neg(3, 1, m) == want);
  }
  CHECK(rhs_eta_ones_neg(3, 1, 0) == make_rational(7, 8));
  CHECK(rhs_eta_ones_neg(3, 1, 0, OnesExponent::as_printed) == make_rational(3, 4));
  CHECK(rhs_eta_ones_neg(2, 0, 0) == -1);
  for (int m = 0; m <= 3; ++m) CHECK(rhs_eta_ones_neg(2, 0, m) == -(m + 1));
  for (int r = 2; r <= 5; ++r)
    for (int n = 0; n < r - 1; ++n)
      for (int m = 0; m <= 3; ++m) {
        INFO("r=" << r << " n=" << n << " m=" << m);
        CHECK(std::fabs(to_double(rhs_eta_ones_neg(r, n, m)) - quad_eval(R::eta_ones_neg(r, n, m + 1)).value) <= 1e-8);
      }
  CHECK_THROWS_AS(rhs_eta_ones_neg(2, 1, 0), std::domain_error);
}

TEST_CASE("xi") {
  CHECK(rhs_xi_neg_pos(0, 2, 0).value == doctest::Approx(kZeta2 - kZeta3).epsilon(1e-12));
  CHECK(rhs_xi_neg_pos(1, 3, 0).value == doctest::Approx((kZeta2 - kZeta3) / 2).epsilon(1e-12));
  CHECK(rhs_xi_neg_pos(0, 2, 1).value == doctest::Approx(quad_eval(R::xi_neg_pos(0, 2, 2)).value).epsilon(1e-9));
  CHECK_THROWS_AS(rhs_xi_neg_pos(1, 2, 0), std::domain_error);
}

TEST_CASE("xitilde") {
  for (int m = 0; m <= 5; ++m)
    CHECK(rhs_xitilde_pos_neg(1, 2, m).value ==
          doctest::Approx(-(m - 2) / std::pow(2.0, m + 1) + m - 2).epsilon(1e-12));
  CHECK(rhs_xitilde_pos_neg(2, 3, 0).value == doctest::Approx(-1).epsilon(1e-12));
  CHECK(rhs_xitilde_pos_neg(3, 4, 0).value == doctest::Approx(-1).epsilon(1e-12));
  CHECK(std::fabs(rhs_xitilde_pos_neg(2, 3, 0, XitildeBase::proof).value + 1) > 0.05);
  CHECK_THROWS_AS(rhs_xitilde_pos_neg(3, 2, 0), std::domain_error);
}

TEST_CASE("depth one family") {
  CHECK(depth_one_family(DepthOneKind::eta, 1, 2, 0).value == doctest::Approx(2 * kZeta3).epsilon(1e-12));
  CHECK(depth_one_family(DepthOneKind::xi, 1, 2, 0).value == doctest::Approx(kZeta3).epsilon(1e-12));
  CHECK(depth_one_family(DepthOneKind::xi, 1, 1, 0).value == doctest::Approx(kZeta2).epsilon(1e-12));
}

TEST_CASE("grand agreement with quadrature") {
  const double tol = 1e-6;
  auto agree = [tol](const NumericValue& rhs, const R& req) {
    INFO(req.describe());
    CHECK(rhs.agrees_with(quad_eval(req), tol));
  };
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n < k; ++n)
      for (int m = 0; m <= 2; ++m) agree(rhs_eta_pos_neg(k, n, m), R::eta_pos_neg(k, n, m + 1));
  for (int n = 0; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int m = 0; m <= 2; ++m) agree(rhs_eta_neg_pos(n, k, m), R::eta_neg_pos(n, k, m + 1));
  for (int n = 0; n <= 1; ++n)
    for (int k = n + 2; k <= 4; ++k)
      for (int m = 0; m <= 2; ++m) agree(rhs_xi_neg_pos(n, k, m), R::xi_neg_pos(n, k, m + 1));
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 0; m <= 2; ++m) agree(rhs_xitilde_pos_neg(k, n, m), R::xitilde_pos_neg(k, n, m + 1));
}

TEST_CASE("boundary k = n + 2 matches quadrature for every m") {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 5; ++m) {
      const R req = R::eta_neg_pos(n, n + 2, m + 1);
      INFO(req.describe());
      CHECK(rhs_eta_neg_pos(n, n + 2, m).agrees_with(quad_eval(req), 1e-6));
    }
}
