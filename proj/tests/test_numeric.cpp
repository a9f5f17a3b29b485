#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixzeta/numeric.hpp"
#include "mixzeta/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

using namespace mixzeta;

namespace {

const double kPi = std::acos(-1.0);
const double kZeta3 = 1.2020569031595942854;

void check_close(const NumericValue& v, double want, double slack = 1e-12) {
  INFO("value " << v << " want " << want);
  CHECK(std::fabs(v.value - want) <= v.abs_error + slack);
}

}  // namespace

TEST_CASE("gamma") {
  check_close(gamma_real(5), 24);
  check_close(gamma_real(1), 1);
  check_close(gamma_real(0.5), std::sqrt(kPi));
  check_close(gamma_real(3.7), 4.17065178379660403, 1e-13);
  CHECK_THROWS(gamma_real(0));
}

TEST_CASE("zeta and hurwitz zeta") {
  check_close(zeta_num(2), kPi * kPi / 6);
  check_close(zeta_num(3), kZeta3);
  check_close(zeta_num(1.5), 2.6123753486854883433);
  check_close(hurwitz_num(2, 2), kPi * kPi / 6 - 1);
  check_close(hurwitz_num(2, 1), kPi * kPi / 6);
  check_close(hurwitz_num(3, 0.5), 8.4143983221171599978, 1e-12);
  CHECK_THROWS(zeta_num(1));
  CHECK_THROWS(hurwitz_num(2, 0));
}

TEST_CASE("polylogarithm values") {
  check_close(polylog_num(1, -1), -std::log(2.0));
  check_close(polylog_num(2, -1), -kPi * kPi / 12);
  check_close(polylog_num(0, -3), -0.75);
  check_close(polylog_num(3, -10), -5.9210648037569734914, 1e-12);
  check_close(polylog_num(3, -2), -1.6682833639665712120, 1e-12);
  check_close(polylog_num(2, -5), -2.7492791260608082900, 1e-12);
  check_close(polylog_num(1, -1.5), -std::log(2.5));
  check_close(polylog_num(2, 0.9), 1.2997147230049587820, 1e-12);
  check_close(polylog_num(4, -0.7), -0.67287426899733098881, 1e-12);
  check_close(polylog_num(-3, -2.5), 0.045814244064972927947, 1e-12);
  check_close(polylog_num(2, 0), 0);
  CHECK_THROWS(polylog_num(2, 1.5));
}

TEST_CASE("polylogarithm derivative relation") {
  for (int k : {1, 2, 3})
    for (double x : {-5.0, -1.5, -0.5, 0.3}) {
      const double h = 1e-5 * std::max(1.0, std::fabs(x));
      const double derivative = (polylog_num(k, x + h).value - polylog_num(k, x - h).value) / (2 * h);
      INFO("k=" << k << " x=" << x);
      CHECK(derivative == doctest::Approx(polylog_num(k - 1, x).value / x).epsilon(1e-6));
    }
}

TEST_CASE("polylogarithm inversion against iterated quadrature") {
  // Li_k(-e^v) = Li_k(-e^{v0}) + int_{v0}^{v} Li_{k-1}(-e^u) du, anchored inside the series range
  const double v0 = std::log(0.25);
  for (int k : {1, 2, 3})
    for (double x : {-10.0, -2.0}) {
      auto f = [k](double u) { return polylog_num(k - 1, -std::exp(u)).value; };
      double err = 0;
      const double integral =
          boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, v0, std::log(-x), 15, 1e-14, &err);
      INFO("k=" << k << " x=" << x);
      CHECK(std::fabs(polylog_num(k, x).value - (polylog_num(k, -0.25).value + integral)) <= 1e-9);
    }
}

TEST_CASE("accurate polylog at one minus exponential") {
  for (int k : {-2, 0, 1, 2, 3})
    for (double t : {0.01, 0.3, 0.6, 2.0}) {
      INFO("k=" << k << " t=" << t);
      CHECK(polylog_one_minus_exp_plus(k, t).value ==
            doctest::Approx(polylog_num(k, 1 - std::exp(t)).value).epsilon(1e-11));
      CHECK(polylog_one_minus_exp_minus(k, t).value ==
            doctest::Approx(polylog_num(k, 1 - std::exp(-t)).value).epsilon(1e-11));
    }
  check_close(polylog_one_minus_exp_plus(1, 3.0), -3.0);
  check_close(polylog_one_minus_exp_minus(1, 3.0), 3.0);
}

TEST_CASE("multiple zeta values") {
  check_close(mzv_num({1, 2}), kZeta3);
  check_close(mzsv_num({1, 2}), 2 * kZeta3);
  check_close(mzsv_num({2}), kPi * kPi / 6);
  check_close(mzv_num({2, 3}), 0.22881039760335375977, 1e-12);
  // zeta(2,2) = (zeta(2)^2 - zeta(4)) / 2
  check_close(mzv_num({2, 2}), 0.81174242528335364364, 1e-12);
  // zeta(1,1,2) = zeta(4)
  check_close(mzv_num({1, 1, 2}), std::pow(kPi, 4) / 90, 1e-12);
  CHECK_THROWS(mzv_num({2, 1}));
  CHECK_THROWS(mzv_num({}));
}

TEST_CASE("stuffle relation") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
    const auto star = mzsv_num({a, b});
    const auto sum = mzv_num({a, b}) + zeta_num(a + b);
    CHECK(star.agrees_with(sum));
  }
}

TEST_CASE("nested and iterated-integral routes agree") {
  const ZetaOptions nested{ZetaRoute::nested, 1e-9, 100000};
  for (const auto& p : std::vector<std::vector<int>>{{1, 2}, {2, 2}, {1, 3}, {3, 2}, {1, 1, 2}, {2, 1, 3}}) {
    INFO("depth " << p.size() << " last " << p.back());
    CHECK(mzv_num(p).agrees_with(mzv_num(p, nested)));
    CHECK(mzsv_num(p).agrees_with(mzsv_num(p, nested)));
    CHECK(mzsv_num(p, nested).abs_error <= 1e-8);
  }
}

TEST_CASE("halving the cutoff never shrinks the error estimate") {
  for (const auto& p : std::vector<std::vector<int>>{{1, 2}, {2, 3}, {1, 1, 3}}) {
    double previous = 0;
    for (long cutoff : {64000L, 32000L, 16000L, 8000L, 4000L}) {
      const auto v = mzsv_num(p, ZetaOptions{ZetaRoute::nested, 1.0, cutoff});
      CHECK(v.abs_error >= previous);
      previous = v.abs_error;
    }
  }
}

TEST_CASE("hurwitz star values") {
  check_close(mhzsv_num(HurwitzStarArgs::uniform({1, 2}, 2)), 2 * kZeta3 - kPi * kPi / 6);
  check_close(mhzsv_num(HurwitzStarArgs::uniform({2}, 3)), kPi * kPi / 6 - 1.25);
  check_close(mhzsv_num({{}, {}}), 1);
  for (const auto& p : std::vector<std::vector<int>>{{2}, {1, 2}, {2, 3}, {1, 1, 2}})
    CHECK(mhzsv_num(HurwitzStarArgs::uniform(p, 1)).agrees_with(mzsv_num(p)));
  const ZetaOptions nested{ZetaRoute::nested, 1e-9, 100000};
  for (int c = 2; c <= 4; ++c) {
    const auto args = HurwitzStarArgs::uniform({1, 2}, c);
    CHECK(mhzsv_num(args).agrees_with(mhzsv_num(args, nested)));
  }
  check_close(mhzsv_num({{1, 2}, {make_rational(1, 2), make_rational(1, 2)}}), 11.048287624915696545, 1e-9);
  check_close(mhzsv_num({{1, 2}, {make_rational(1, 2), make_rational(3, 2)}}), 2.6338893027985365459, 1e-9);
  CHECK_THROWS(mhzsv_num({{1, 2}, {Rational(1)}}));
  CHECK_THROWS(mhzsv_num({{2}, {Rational(0)}}));
}

TEST_CASE("exp-sinh quadrature") {
  // int t^{s-1} e^{-t} dt = Gamma(s)
  for (double s : {0.5, 1.0, 2.5, 4.0}) {
    const auto r = mellin_integral([](double t) { return std::exp(-t); }, s);
    CHECK(r.converged);
    CHECK(r.evaluations <= 2000);
    CHECK(r.integral.value == doctest::Approx(gamma_real(s).value).epsilon(1e-10));
  }
  // int t^{s-1} / (e^t - 1) dt = Gamma(s) zeta(s)
  const auto r = mellin_integral([](double t) { return 1 / std::expm1(t); }, 3.0);
  CHECK(r.integral.value == doctest::Approx(2 * kZeta3).epsilon(1e-10));
}
