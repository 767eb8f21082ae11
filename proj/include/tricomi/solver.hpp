// Pseudospectral solver for  u_tt - t^{2m} Lap(u) = |u_t|^p  on the
// periodic box, with the exact symbol propagator for the linear part,
// RK4 time stepping with 2/3-rule dealiasing of the nonlinearity, the
// Picard iteration on the Duhamel integral form, and blow-up detection.

#ifndef TRICOMI_SOLVER_HPP_
#define TRICOMI_SOLVER_HPP_

#include <map>
#include <string>
#include <vector>

#include "tricomi/grid.hpp"

namespace tricomi {

/// Sampled initial pair.  f and g hold the unscaled profiles; the solver
/// applies the epsilon factor.  Profiles are the standard bump
/// A * exp(-1/(1-|x|^2)) supported in the unit ball.
struct CauchyData {
  double epsilon = 0.0;
  double amp_f = 0.0;
  double amp_g = 0.0;
  std::vector<double> f, g;
  double support_radius = 0.0;
};

/// Builds and validates the data: amplitudes must keep a(m) f + g
/// non-negative and not identically zero (negative amplitudes rejected,
/// the pointwise minimum re-checked on the grid).
CauchyData sample_data(const SpectralGrid& grid, double amp_f, double amp_g,
                       double epsilon, double m);

enum class SimStatus { running, blown_up, horizon_reached, step_underflow };

const char* to_string(SimStatus s);

struct SimState {
  double t = 0.0;
  std::vector<double> u, v;
  double dt = 0.0;
  SimStatus status = SimStatus::running;
  double max_v = 0.0;
  double max_u = 0.0;
  double support_radius = 0.0;
  double energy = 0.0;  // (1/2) int v^2 + t^{2m} |grad u|^2
  long long steps = 0;
};

struct LinearPair {
  std::vector<double> u, v;
  double reality_residue = 0.0;  // max |Im symbol| / |symbol scale|
};

/// Exact (to symbol accuracy) linear evolution of the data to time t.
LinearPair linear_evolve(const SpectralGrid& grid, double m,
                         const CauchyData& data, double t,
                         const SpecFunConfig& cfg = default_specfun_config());

struct StepParams {
  double m = 0.0;
  double p = 2.0;
  double cfl = 0.4;
  bool nonlinear = true;
  double dt_cap = 0.0;  // optional fixed upper bound on dt (0: none)
};

/// One explicit RK4 step; dt = cfl dx / max(1, t_next^m), additionally
/// capped by the nonlinear growth rate so threshold crossings near
/// blow-up stay resolved.  Updates diagnostics; flags blown_up on
/// non-finite fields (state rolled back to the last finite time) and
/// step_underflow below dt = 1e-12.
void nonlinear_step(SimState& state, const SpectralGrid& grid,
                    const StepParams& sp);

/// |v|^p with the v = 0 branch returning 0 (p > 1).
double pow_abs(double v, double p);

struct TraceSample {
  double t, max_v, max_u, support_radius, dt;
};

struct FieldSnapshot {
  double t;
  std::vector<double> u, v;
};

struct RunParams {
  double m = 0.0;
  double p = 2.0;
  double cfl = 0.4;
  double v_threshold = 1e6;  // >= 1e4
  double t_max = 10.0;
  int trace_stride = 10;
  int field_stride = 0;  // 0: keep no field snapshots
  std::vector<double> extra_thresholds;  // additional crossing detectors
  bool nonlinear = true;
};

struct RunResult {
  SimStatus status = SimStatus::running;
  double T_eps = 0.0;
  double terminal_max_v = 0.0;
  long long steps = 0;
  std::vector<TraceSample> trace;
  std::vector<FieldSnapshot> fields;
  std::map<double, double> threshold_times;  // threshold -> first crossing
  // worst (support radius - cone radius) in cells, monitored while the
  // fields are still resolved (max_v below 1e3)
  double worst_cone_excess_cells = 0.0;
};

/// Advances from t = 0 (first interval covered by the exact linear
/// propagator) until max|v| crosses v_threshold, t reaches t_max, or the
/// step size underflows.
RunResult run_until_blowup(const SpectralGrid& grid, const CauchyData& data,
                           const RunParams& rp);

struct DuhamelResult {
  std::vector<double> u, v;
  std::vector<double> iterate_distances;  // sup-norm between iterates
  bool contraction_ok = true;   // distances decayed by >= 2x per sweep
  double quadrature_error = -1.0;  // filled when check_quadrature is set
};

/// Fixed point of the integral form
///   u(t) = eps V1 f + eps V2 g + int_0^t [W2 - W1](s,t) |u_t(s)|^p ds
/// by Picard iteration on quad_points trapezoid nodes over [0, T].
DuhamelResult duhamel_solve(const SpectralGrid& grid, double m, double p,
                            const CauchyData& data, double T, int picard_iters,
                            int quad_points, bool check_quadrature = false,
                            const SpecFunConfig& cfg = default_specfun_config());

/// Support-cone radius 1 + t^{m+1}/(m+1).
double cone_radius(double m, double t);

}  // namespace tricomi

#endif  // TRICOMI_SOLVER_HPP_
