// Adaptive Dormand-Prince 5(4) embedded pair with PI step-size control.
// Used as the independent integration oracle behind the closed-form ODE
// solutions and the per-mode propagator symbols.

#ifndef TRICOMI_ODE45_HPP_
#define TRICOMI_ODE45_HPP_

#include <functional>
#include <vector>

namespace tricomi {

struct Ode45Options {
  double tol = 1e-10;       // local error target per step (mixed abs/rel)
  double abs_scale = 1.0;   // absolute component = tol * abs_scale
  double h_init = 0.0;      // 0 -> automatic
  double h_min = 1e-14;
  int max_steps = 2000000;
};

using OdeRhs = std::function<void(double t, const double* y, double* dydt)>;

/// Integrates y' = f(t, y) from (t0, y0) to t1.  Deterministic for fixed
/// inputs; throws std::runtime_error on step-size underflow.  The error
/// weight for component i is tol * (abs_scale + |y_i|), which keeps the
/// step sequence invariant under exact power-of-two rescaling of the data
/// whenever abs_scale is rescaled along with it.
std::vector<double> ode45_integrate(const OdeRhs& f, double t0,
                                    std::vector<double> y0, double t1,
                                    const Ode45Options& opt = {});

}  // namespace tricomi

#endif  // TRICOMI_ODE45_HPP_
