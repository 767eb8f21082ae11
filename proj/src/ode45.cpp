#include "tricomi/ode45.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tricomi {

namespace {

// Dormand & Prince RK5(4)7M tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// difference between 5th and embedded 4th order weights
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

std::vector<double> ode45_integrate(const OdeRhs& f, double t0,
                                    std::vector<double> y, double t1,
                                    const Ode45Options& opt) {
  const std::size_t n = y.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n),
      y5(n);
  double t = t0;
  double span = t1 - t0;
  double h = opt.h_init > 0.0 ? opt.h_init : span / 100.0;
  h = std::min(h, span);
  double err_prev = 1.0;
  const double alpha = 0.7 / 5.0, beta = 0.4 / 5.0;  // PI controller

  f(t, y.data(), k1.data());
  for (int step = 0; step < opt.max_steps; ++step) {
    if (t >= t1) return y;
    if (t + h > t1) h = t1 - t;
    if (h < opt.h_min)
      throw std::runtime_error("ode45: step size underflow");

    for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, yt.data(), k2.data());
    for (std::size_t i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, yt.data(), k3.data());
    for (std::size_t i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, yt.data(), k4.data());
    for (std::size_t i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, yt.data(), k5.data());
    for (std::size_t i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                          a64 * k4[i] + a65 * k5[i]);
    f(t + h, yt.data(), k6.data());
    for (std::size_t i = 0; i < n; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    f(t + h, y5.data(), k7.data());

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                      e6 * k6[i] + e7 * k7[i]);
      double w = opt.tol * (opt.abs_scale + std::abs(y[i]));
      double r = e / w;
      err += r * r;
    }
    err = std::sqrt(err / n);

    if (err <= 1.0) {
      t += h;
      y.swap(y5);
      k1.swap(k7);  // FSAL
      double fac = std::pow(err > 1e-300 ? err : 1e-300, -alpha) *
                   std::pow(err_prev, beta);
      h *= std::clamp(0.9 * fac, 0.2, 5.0);
      err_prev = std::max(err, 1e-4);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -alpha));
      // k1 still holds f(t, y)
    }
  }
  throw std::runtime_error("ode45: max step count exceeded");
}

}  // namespace tricomi
