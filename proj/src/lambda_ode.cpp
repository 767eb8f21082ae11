#include "tricomi/lambda_ode.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tricomi/ode45.hpp"

namespace tricomi {

TricomiIndex::TricomiIndex(double m_value) : m(m_value) {
  if (m < 0.0) throw std::domain_error("TricomiIndex: m must be >= 0");
  mu = m / (2.0 * (m + 1.0));
  nu_minus = 0.5 + mu;
  nu_plus = 0.5 + mu;
  phase_exponent = m + 1.0;
}

double TricomiIndex::phase(double t) const {
  return std::pow(t, phase_exponent) / phase_exponent;
}

namespace {
void require_positive_t(double t, const char* who) {
  if (!(t > 0.0))
    throw std::domain_error(std::string(who) + ": requires t > 0");
}
}  // namespace

double lambda_minus(const TricomiIndex& idx, double t) {
  require_positive_t(t, "lambda_minus");
  return std::pow(t, idx.m + 0.5) * bessel_k(idx.nu_minus, idx.phase(t));
}

double lambda_plus(const TricomiIndex& idx, double t) {
  require_positive_t(t, "lambda_plus");
  return std::pow(t, idx.m + 0.5) * bessel_i(idx.nu_plus, idx.phase(t));
}

double lambda_minus_prime(const TricomiIndex& idx, double t) {
  require_positive_t(t, "lambda_minus_prime");
  // the order drops to 1/2 - mu = 1/(2(m+1)) after differentiation
  return -std::pow(t, 2.0 * idx.m + 0.5) * bessel_k(0.5 - idx.mu, idx.phase(t));
}

double lambda_plus_prime(const TricomiIndex& idx, double t) {
  require_positive_t(t, "lambda_plus_prime");
  return std::pow(t, 2.0 * idx.m + 0.5) * bessel_i(idx.mu - 0.5, idx.phase(t));
}

double wronskian_check(const TricomiIndex& idx, double t) {
  return lambda_minus(idx, t) * lambda_plus_prime(idx, t) -
         lambda_plus(idx, t) * lambda_minus_prime(idx, t);
}

double c0(const TricomiIndex& idx, int sign) {
  double mu = sign >= 0 ? idx.mu : -idx.mu;
  return std::pow(2.0, mu - 0.5) * std::pow(idx.m + 1.0, mu + 0.5) *
         gamma_fn(mu + 0.5);
}

double lambda_fn(const TricomiIndex& idx, double t) {
  if (t < 0.0) throw std::domain_error("lambda_fn: requires t >= 0");
  if (idx.phase(t) < 1e-250) return c0(idx, +1);
  return lambda_minus(idx, t);
}

double lambda_fn_deriv(const TricomiIndex& idx, double t) {
  if (t < 0.0) throw std::domain_error("lambda_fn_deriv: requires t >= 0");
  if (t == 0.0) return idx.m > 0.0 ? 0.0 : -c0(idx, -1);
  return lambda_minus_prime(idx, t);
}

double lambda_fn_deriv_scaled(const TricomiIndex& idx, double t) {
  if (t < 0.0) throw std::domain_error("lambda_fn_deriv_scaled: t >= 0");
  if (idx.phase(t) < 1e-250) return -c0(idx, -1);
  return -std::sqrt(t) * bessel_k(0.5 - idx.mu, idx.phase(t));
}

std::pair<double, double> ode_oracle(const TricomiIndex& idx, double y0,
                                     double yp0, double t0, double t1,
                                     double tol) {
  if (!(t0 > 0.0) || !(t1 > t0))
    throw std::domain_error("ode_oracle: requires 0 < t0 < t1");
  if (tol < 1e-12 || tol > 1e-6)
    throw std::invalid_argument("ode_oracle: tol outside [1e-12, 1e-6]");
  double m = idx.m;
  OdeRhs rhs = [m](double t, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = 2.0 * m / t * y[1] + std::pow(t, 2.0 * m) * y[0];
  };
  Ode45Options opt;
  opt.tol = tol / 20.0;  // margin so the accumulated error stays near tol
  opt.abs_scale = std::max(std::abs(y0), std::abs(yp0));
  if (opt.abs_scale == 0.0) opt.abs_scale = 1.0;
  auto y = ode45_integrate(rhs, t0, {y0, yp0}, t1, opt);
  return {y[0], y[1]};
}

SeriesCoeffs::SeriesCoeffs(int m_value, double a0_value, double a_odd_value,
                           int n_terms)
    : m(m_value), a0(a0_value), a_odd(a_odd_value) {
  if (m < 0) throw std::domain_error("SeriesCoeffs: m must be a non-negative integer");
  if (n_terms < 1) throw std::invalid_argument("SeriesCoeffs: n_terms >= 1");
  coeffs.assign(n_terms, 0.0);
  if (n_terms > 0) coeffs[0] = a0;
  if (2 * m + 1 < n_terms) coeffs[2 * m + 1] = a_odd;
  for (int h = 2 * m + 2; h < n_terms; ++h)
    coeffs[h] = coeffs[h - 2 * m - 2] /
                (static_cast<double>(h) * (h - 2.0 * m - 1.0));
}

double series_coeff(int m, int h, double a0, double a_odd) {
  if (m < 0) throw std::domain_error("series_coeff: m must be non-negative");
  SeriesCoeffs sc(m, a0, a_odd, h + 1);
  double rec = sc.coeffs[h];

  // closed Gamma form, checked against the recursion
  int period = 2 * (m + 1);
  double e = (m + 0.5) / (m + 1.0);
  double closed = 0.0;
  if (h % period == 0) {
    int k = h / period;
    closed = std::pow(period, -2.0 * k) * gamma_fn(1.0 - e) /
             (std::tgamma(k + 1.0) * gamma_fn(k + 1.0 - e)) * a0;
  } else if ((h - 2 * m - 1) >= 0 && (h - 2 * m - 1) % period == 0) {
    int k = (h - 2 * m - 1) / period;
    closed = std::pow(period, -2.0 * k) * gamma_fn(1.0 + e) /
             (std::tgamma(k + 1.0) * gamma_fn(k + 1.0 + e)) * a_odd;
  }
  double scale = std::max({std::abs(rec), std::abs(closed), 1e-300});
  if (std::abs(rec - closed) > 1e-12 * scale)
    throw std::runtime_error("series_coeff: recursion and Gamma form disagree");
  return rec;
}

// Sums the powers through t^{n_terms} (inclusive).
double series_lambda(const SeriesCoeffs& coeffs, double t, int n_terms) {
  if (t < 0.0) throw std::domain_error("series_lambda: requires t >= 0");
  int n = std::min<int>(n_terms, static_cast<int>(coeffs.coeffs.size()) - 1);
  double sum = 0.0, tp = 1.0;
  for (int h = 0; h <= n; ++h) {
    sum += coeffs.coeffs[h] * tp;
    tp *= t;
  }
  return sum;
}

}  // namespace tricomi
