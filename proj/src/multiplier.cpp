#include "tricomi/multiplier.hpp"

#include <cmath>
#include <stdexcept>

#include "tricomi/ode45.hpp"

namespace tricomi {

namespace {
// Below this m the Kummer parameters (mu, 2mu) degenerate towards (0,0);
// the symbols converge to the plain wave forms, which we use directly.
constexpr double kWaveBranch = 1e-8;

void check_point(const ModeSymbol& ms) {
  if (ms.m < 0.0 || ms.t < 0.0 || ms.r < 0.0)
    throw std::domain_error("mode symbol: m, t, r must be non-negative");
}
}  // namespace

double ModeSymbol::phase() const {
  return std::pow(t, m + 1.0) / (m + 1.0);
}

cplx ModeSymbol::z() const { return {0.0, 2.0 * phase() * r}; }

cplx v1_symbol(const ModeSymbol& ms, const SpecFunConfig& cfg) {
  check_point(ms);
  if (ms.t == 0.0 || ms.r == 0.0) return 1.0;
  if (ms.m < kWaveBranch) return std::cos(ms.phase() * ms.r);
  double mu = ms.mu();
  cplx z = ms.z();
  return std::exp(-z / 2.0) * kummer_phi({mu, 2.0 * mu, z}, cfg);
}

cplx v2_symbol(const ModeSymbol& ms, const SpecFunConfig& cfg) {
  check_point(ms);
  if (ms.t == 0.0) return 0.0;
  if (ms.r == 0.0) return ms.t;
  if (ms.m < kWaveBranch) return std::sin(ms.phase() * ms.r) / ms.r;
  double mu = ms.mu();
  cplx z = ms.z();
  return ms.t * std::exp(-z / 2.0) *
         kummer_phi({1.0 - mu, 2.0 * (1.0 - mu), z}, cfg);
}

cplx dt_v1_symbol(const ModeSymbol& ms, const SpecFunConfig& cfg) {
  check_point(ms);
  if (ms.t == 0.0 || ms.r == 0.0) return 0.0;
  if (ms.m < kWaveBranch)
    return -std::pow(ms.t, ms.m) * ms.r * std::sin(ms.phase() * ms.r);
  double mu = ms.mu();
  cplx z = ms.z();
  // z/t written as 2 i t^m r to stay finite for small t
  cplx z_over_t{0.0, 2.0 * std::pow(ms.t, ms.m) * ms.r};
  cplx diff = kummer_phi({mu + 1.0, 2.0 * mu + 1.0, z}, cfg) -
              kummer_phi({mu, 2.0 * mu, z}, cfg);
  return 0.5 * (ms.m + 1.0) * z_over_t * std::exp(-z / 2.0) * diff;
}

cplx dt_v2_symbol(const ModeSymbol& ms, const SpecFunConfig& cfg) {
  check_point(ms);
  if (ms.t == 0.0 || ms.r == 0.0) return 1.0;
  if (ms.m < kWaveBranch)
    return std::pow(ms.t, ms.m) * std::cos(ms.phase() * ms.r);
  double mu = ms.mu();
  cplx z = ms.z();
  cplx bracket = kummer_phi({1.0 - mu, 1.0 - 2.0 * mu, z}, cfg) -
                 0.5 * (ms.m + 1.0) * z *
                     kummer_phi({1.0 - mu, 2.0 * (1.0 - mu), z}, cfg);
  return std::exp(-z / 2.0) * bracket;
}

WSymbols w_symbols(double m, double s, double t, double r,
                   const SpecFunConfig& cfg) {
  if (!(s > 0.0) || s > t)
    throw std::domain_error("w_symbols: requires 0 < s <= t");
  ModeSymbol at_t{m, t, r}, at_s{m, s, r};
  cplx v1t = v1_symbol(at_t, cfg), v2t = v2_symbol(at_t, cfg);
  cplx v1s = v1_symbol(at_s, cfg), v2s = v2_symbol(at_s, cfg);
  return {v1t * v2s, v2t * v1s, dt_v1_symbol(at_t, cfg) * v2s,
          dt_v2_symbol(at_t, cfg) * v1s};
}

ModeFundamental mode_oracle(double m, double r, double t1, double tol) {
  if (m < 0.0 || r < 0.0 || !(t1 > 0.0))
    throw std::domain_error("mode_oracle: bad arguments");
  if (r == 0.0) return {1.0, 0.0, t1, 1.0};

  // Series seed at t0: the mode equation has analytic solutions
  //   y1 = sum c_k t^{(2m+2)k},  y2 = sum d_k t^{(2m+2)k + 1}
  // with c_{k+1} = -r^2 c_k / [(2m+2)(k+1) ((2m+2)(k+1) - 1)] and the
  // shifted twin for d.
  double t0 = std::min(0.01, t1 / 100.0);
  double p = 2.0 * m + 2.0;
  double y1 = 0.0, y1p = 0.0, y2 = 0.0, y2p = 0.0;
  double c = 1.0, d = 1.0;
  for (int k = 0; k <= 8; ++k) {
    double e1 = p * k, e2 = p * k + 1.0;
    y1 += c * std::pow(t0, e1);
    if (e1 > 0.0) y1p += c * e1 * std::pow(t0, e1 - 1.0);
    y2 += d * std::pow(t0, e2);
    y2p += d * e2 * std::pow(t0, e2 - 1.0);
    c *= -r * r / ((p * (k + 1)) * (p * (k + 1) - 1.0));
    d *= -r * r / ((p * (k + 1) + 1.0) * (p * (k + 1)));
  }

  OdeRhs rhs = [m, r](double t, const double* y, double* dy) {
    double w = std::pow(t, 2.0 * m) * r * r;
    dy[0] = y[1];
    dy[1] = -w * y[0];
    dy[2] = y[3];
    dy[3] = -w * y[2];
  };
  Ode45Options opt;
  opt.tol = tol / 20.0;
  opt.abs_scale = 1.0;
  auto y = ode45_integrate(rhs, t0, {y1, y1p, y2, y2p}, t1, opt);
  return {y[0], y[1], y[2], y[3]};
}

namespace {
double bracket_r(double r) { return std::sqrt(1.0 + r * r); }
double bracket_t(double t) { return std::sqrt(1.0 + t * t); }

void check_sigma(SymbolKind kind, double sigma, double mu) {
  bool ok = false;
  switch (kind) {
    case SymbolKind::V1: ok = -mu <= sigma && sigma <= 0.0; break;
    case SymbolKind::V2: ok = mu - 1.0 <= sigma && sigma <= 0.0; break;
    case SymbolKind::DtV1: ok = 1.0 - mu <= sigma && sigma <= 1.0; break;
    case SymbolKind::DtV2: ok = sigma >= mu; break;
    // the W weights are pinned at the L^2 energy line
    case SymbolKind::W1:
    case SymbolKind::W2: ok = sigma == -1.0; break;
    case SymbolKind::DtW1:
    case SymbolKind::DtW2: ok = sigma == 0.0; break;
  }
  if (!ok)
    throw std::invalid_argument("symbol_bound_check: sigma outside the "
                                "admissible window for this kind");
}
}  // namespace

double symbol_bound_check(const SymbolBoundSpec& spec, double m,
                          const std::vector<double>& t_grid,
                          const std::vector<double>& s_grid,
                          const std::vector<double>& r_grid,
                          const SpecFunConfig& cfg) {
  double mu = m / (2.0 * (m + 1.0));
  check_sigma(spec.kind, spec.sigma, mu);
  for (double t : t_grid)
    if (!(t > 0.0)) throw std::invalid_argument("t grid must be positive");
  for (double r : r_grid)
    if (!(r > 0.0)) throw std::invalid_argument("r grid must be positive");

  double sg = spec.sigma;
  double worst = 0.0;
  auto track = [&worst](double v) { worst = std::max(worst, v); };

  for (double t : t_grid) {
    for (double r : r_grid) {
      ModeSymbol ms{m, t, r};
      switch (spec.kind) {
        case SymbolKind::V1:
          track(std::pow(r, -sg) * std::abs(v1_symbol(ms, cfg)) *
                std::pow(t, -sg * (m + 1.0)));
          break;
        case SymbolKind::V2:
          track(std::pow(r, -sg) * std::abs(v2_symbol(ms, cfg)) *
                std::pow(t, -sg * (m + 1.0) - 1.0));
          break;
        case SymbolKind::DtV1:
          track(std::pow(bracket_r(r), -sg) * std::abs(dt_v1_symbol(ms, cfg)) *
                std::pow(t, -sg * (m + 1.0) + 1.0));
          break;
        case SymbolKind::DtV2:
          track(std::pow(bracket_r(r), -sg) * std::abs(dt_v2_symbol(ms, cfg)) *
                std::pow(bracket_t(t), -sg * (m + 1.0)));
          break;
        default: {
          for (double s : s_grid) {
            if (!(s > 0.0) || s > t) continue;
            WSymbols w = w_symbols(m, s, t, r, cfg);
            double ratio = std::pow(t / s, -m / 2.0);
            switch (spec.kind) {
              case SymbolKind::W1:
                track(r * std::abs(w.w1) * std::pow(t * s, m / 2.0));
                break;
              case SymbolKind::W2:
                track(r * std::abs(w.w2) * std::pow(t * s, m / 2.0));
                break;
              case SymbolKind::DtW1:
                track(std::abs(w.dt_w1) * ratio);
                break;
              case SymbolKind::DtW2:
                track(std::abs(w.dt_w2) * ratio);
                break;
              default: break;
            }
          }
          break;
        }
      }
    }
  }
  return worst;
}

}  // namespace tricomi
