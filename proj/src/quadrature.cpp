#include "mixzeta/quadrature.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mixzeta {

namespace {

constexpr double kTinyT = 1e-280;
constexpr double kUpperU = 2.3;
constexpr int kMaxLevel = 10;

}  // namespace

QuadratureResult mellin_integral(const std::function<double(double)>& f, double s, const QuadratureOptions& options) {
  if (!(s > 0)) throw std::domain_error("Mellin integral needs s > 0");
  if (!(options.tol > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
  const double half_pi = std::numbers::pi / 2;
  // below this u the weight t^s is under e^{-60}
  const double lower_u = -std::asinh(60.0 / (s * half_pi));

  QuadratureResult result;
  double magnitude = 0;
  auto node = [&](double u) {
    const double log_t = half_pi * std::sinh(u);
    const double t = std::max(std::exp(log_t), kTinyT);
    const double weight = std::exp(s * log_t) * half_pi * std::cosh(u);
    ++result.evaluations;
    if (weight == 0) return 0.0;
    const double term = weight * f(t);
    magnitude += std::fabs(term);
    return term;
  };

  double h = 0.5;
  double sum = 0;
  for (double u = std::ceil(lower_u / h) * h; u <= kUpperU; u += h) sum += node(u);
  double estimate = h * sum;
  result.integral = {estimate, std::fabs(estimate)};
  for (int level = 1; level <= kMaxLevel; ++level) {
    const double start = std::ceil((lower_u / h - 0.5)) * h + h / 2;
    const int needed = static_cast<int>((kUpperU - start) / h) + 1;
    if (result.evaluations + needed > options.max_evaluations) break;
    for (double u = start; u <= kUpperU; u += h) sum += node(u);
    h /= 2;
    const double next = h * sum;
    const double diff = std::fabs(next - estimate);
    estimate = next;
    result.integral = {estimate, diff + 16 * DBL_EPSILON * h * magnitude};
    if (level >= 3 && diff <= options.tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace mixzeta
