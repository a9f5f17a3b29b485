#pragma once

#include "mixzeta/numeric.hpp"

#include <functional>

namespace mixzeta {

struct QuadratureOptions {
  double tol = 1e-9;
  int max_evaluations = 2000;
};

struct QuadratureResult {
  NumericValue integral;
  int evaluations = 0;
  bool converged = false;
};

/// int_0^inf t^{s-1} f(t) dt for f analytic on (0, inf), bounded at 0 and
/// exponentially decaying, by the exp-sinh rule t = exp(pi/2 sinh u) with step
/// halving. The error is the difference of the last two levels.
QuadratureResult mellin_integral(const std::function<double(double)>& f, double s,
                                 const QuadratureOptions& options = {});

}  // namespace mixzeta
