// The auxiliary ODE  lambda'' - 2m t^{-1} lambda' - t^{2m} lambda = 0.
//
// Closed-form fundamental system in terms of modified Bessel functions of
// order 1/2 +- mu evaluated at the phase t^{m+1}/(m+1), the decaying
// combination lambda(t) with its boundary constants c0(+-mu), the analytic
// power-series solution, and an adaptive-integration oracle.

#ifndef TRICOMI_LAMBDA_ODE_HPP_
#define TRICOMI_LAMBDA_ODE_HPP_

#include <utility>
#include <vector>

#include "tricomi/specfun.hpp"

namespace tricomi {

/// Degeneracy exponent m >= 0 and its derived constants.
struct TricomiIndex {
  double m;
  double mu;              // m / (2(m+1)), in [0, 1/2)
  double nu_minus;        // 1/2 + mu: order of K in lambda_-
  double nu_plus;         // 1/2 + mu: order of I in lambda_+
  double phase_exponent;  // m + 1

  explicit TricomiIndex(double m_value);
  double phase(double t) const;  // t^{m+1} / (m+1)
};

double lambda_minus(const TricomiIndex& idx, double t);
double lambda_plus(const TricomiIndex& idx, double t);
double lambda_minus_prime(const TricomiIndex& idx, double t);
double lambda_plus_prime(const TricomiIndex& idx, double t);

/// lambda_- lambda_+' - lambda_+ lambda_-' from the closed-form derivative
/// expressions; equals (m+1) t^{2m}.
double wronskian_check(const TricomiIndex& idx, double t);

/// Boundary constants c0(+-mu) = 2^{+-mu-1/2} (m+1)^{+-mu+1/2} Gamma(+-mu+1/2).
double c0(const TricomiIndex& idx, int sign);

/// The decaying solution lambda(t) (= lambda_-), defined at t = 0 by its
/// limit c0(mu); lambda_fn_deriv returns lambda'(t) with lambda'(0) taken
/// as the limit of -c0(-mu) t^{2m}.
double lambda_fn(const TricomiIndex& idx, double t);
double lambda_fn_deriv(const TricomiIndex& idx, double t);

/// lambda'(t) / t^{2m}, stable down to t = 0 where it tends to -c0(-mu).
double lambda_fn_deriv_scaled(const TricomiIndex& idx, double t);

/// Adaptive integration of the ODE from (y0, yp0) at t0 > 0 to t1.
/// Deterministic; local error per step bounded by tol.
std::pair<double, double> ode_oracle(const TricomiIndex& idx, double y0,
                                     double yp0, double t0, double t1,
                                     double tol);

/// Power-series coefficients a_h for integer m: a_h vanishes unless
/// h = 2(m+1)k or h = 2(m+1)k + 2m+1, with a_h = a_{h-2m-2}/(h(h-2m-1)).
struct SeriesCoeffs {
  int m;
  double a0;
  double a_odd;  // coefficient of t^{2m+1}
  std::vector<double> coeffs;

  SeriesCoeffs(int m_value, double a0_value, double a_odd_value, int n_terms);
};

/// Recursion value of a_h; verifies the closed Gamma form to 1e-12.
double series_coeff(int m, int h, double a0, double a_odd);

/// Partial sum of the ansatz at t, powers through t^{n_terms} inclusive.
double series_lambda(const SeriesCoeffs& coeffs, double t, int n_terms);

}  // namespace tricomi

#endif  // TRICOMI_LAMBDA_ODE_HPP_
