#pragma once

// Kaneko-Tsumura type zeta functions as Mellin integrals:
//
//   eta(index; s)    = 1/Gamma(s) int t^{s-1} Li_index(1 - e^t)    / (1 - e^t)    dt
//   xi(-n, k; s)     = 1/Gamma(s) int t^{s-1} Li_{-n,k}(1 - e^-t)  / (e^t - 1)    dt
//   xitilde(k,-n; s) = 1/Gamma(s) int t^{s-1} Li_{k,-n}(1 - e^t)   / (e^{-t} - 1) dt

#include "mixzeta/numeric.hpp"
#include "mixzeta/quadrature.hpp"
#include "mixzeta/signed_index.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixzeta {

enum class SpecialKind { eta_pos_neg, eta_neg_pos, eta_ones_neg, xi_neg_pos, xitilde_pos_neg };

std::string to_string(SpecialKind kind);

/// The parameters violate the convergence condition of the integral.
class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One of the five supported functions at a real s > 0.
///
/// eta_pos_neg: eta(k, -n); eta_neg_pos: eta(-n, k); eta_ones_neg: eta({1}^{r-1}, -n);
/// xi_neg_pos: xi(-n, k); xitilde_pos_neg: xitilde(k, -n).
struct SpecialFunctionRequest {
  SpecialKind kind = SpecialKind::eta_pos_neg;
  int k = 0;
  int n = 0;
  int r = 0;
  double s = 1.0;

  static SpecialFunctionRequest eta_pos_neg(int k, int n, double s);
  static SpecialFunctionRequest eta_neg_pos(int n, int k, double s);
  static SpecialFunctionRequest eta_ones_neg(int r, int n, double s);
  static SpecialFunctionRequest xi_neg_pos(int n, int k, double s);
  static SpecialFunctionRequest xitilde_pos_neg(int k, int n, double s);

  /// Classify a function name (eta, xi, xitilde) and index, e.g. ("eta", (2,-1)).
  static SpecialFunctionRequest from_index(const std::string& function, const SignedIndex& index, double s);

  /// Throws AdmissibilityError when the integral does not converge.
  void validate() const;

  SignedIndex index() const;
  std::string describe() const;
};

/// Li_index(z) / z by the applicable expansion lemma, for real z in (-1, 1), z != 0.
/// index must be (k, -n), (-n, k) or ({1}^{r-1}, -n).
NumericValue lemma_expansion_over_z(const SignedIndex& index, double z);

enum class OnesExpansion { stirling, derivative };

/// The integrand without the factor t^{s-1}. s is ignored.
double integrand(const SpecialFunctionRequest& request, double t,
                 OnesExpansion ones = OnesExpansion::stirling);

/// The defining integral divided by Gamma(s).
NumericValue quad_eval(const SpecialFunctionRequest& request, const QuadratureOptions& options = {},
                       OnesExpansion ones = OnesExpansion::stirling);

/// Registered closed forms: eta_1_0, eta_0_1, eta_neg1_1, eta_1_1_neg1, xitilde_1_neg2
/// for real s > 0, and eta_neg1_3, xi_0_2, xi_neg1_3 for integer s >= 1.
NumericValue closed_form_eval(const std::string& name, double s);
std::vector<std::string> closed_form_names();
/// The registered name covering a request's function and index, if any.
std::optional<std::string> closed_form_for(const SpecialFunctionRequest& request);

}  // namespace mixzeta
