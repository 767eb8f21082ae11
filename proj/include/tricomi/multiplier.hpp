// Fourier-multiplier symbols of the linear degenerate wave propagator.
//
// Each radial mode solves  u'' + t^{2m} r^2 u = 0; V1 and V2 are the
// fundamental pair normalized to data (1,0) and (0,1), expressed through
// Kummer functions of z = 2i phi(t) r with phi(t) = t^{m+1}/(m+1).
// W1, W2 are the composed two-time symbols whose difference is the
// Duhamel kernel.  All symbol values are real for real data; they are
// returned as complex with the imaginary residue kept as a diagnostic.

#ifndef TRICOMI_MULTIPLIER_HPP_
#define TRICOMI_MULTIPLIER_HPP_

#include <vector>

#include "tricomi/specfun.hpp"

namespace tricomi {

/// One (m, t, r) evaluation point.
struct ModeSymbol {
  double m;  // degeneracy exponent, >= 0
  double t;  // time, >= 0
  double r;  // radial frequency |xi|, >= 0

  double mu() const { return m / (2.0 * (m + 1.0)); }
  double phase() const;      // t^{m+1} / (m+1)
  cplx z() const;            // 2 i phase r, on the upper imaginary axis
};

cplx v1_symbol(const ModeSymbol& ms,
               const SpecFunConfig& cfg = default_specfun_config());
cplx v2_symbol(const ModeSymbol& ms,
               const SpecFunConfig& cfg = default_specfun_config());
cplx dt_v1_symbol(const ModeSymbol& ms,
                  const SpecFunConfig& cfg = default_specfun_config());
cplx dt_v2_symbol(const ModeSymbol& ms,
                  const SpecFunConfig& cfg = default_specfun_config());

struct WSymbols {
  cplx w1;     // V1(t) V2(s)
  cplx w2;     // V2(t) V1(s)
  cplx dt_w1;  // dtV1(t) V2(s)
  cplx dt_w2;  // dtV2(t) V1(s)
};

/// Composed symbols for 0 < s <= t (s > t is rejected).
WSymbols w_symbols(double m, double s, double t, double r,
                   const SpecFunConfig& cfg = default_specfun_config());

struct ModeFundamental {
  double y1, y1p;  // data (1, 0)
  double y2, y2p;  // data (0, 1)
};

/// Adaptive integration of the mode equation from a series-seeded start
/// near t = 0 up to t1; the benchmark the symbols are checked against.
ModeFundamental mode_oracle(double m, double r, double t1, double tol);

enum class SymbolKind { V1, V2, DtV1, DtV2, W1, W2, DtW1, DtW2 };

/// A claimed pointwise weight:  |r^{-sigma} symbol| <= C * growth(t[,s]).
/// sigma must lie in the admissible window of its kind.
struct SymbolBoundSpec {
  SymbolKind kind;
  double sigma;
};

/// Scans the grids and returns the worst-case constant
///   max |weighted symbol| / growth.
/// The t/s/r grids are caller-supplied so refinement stability can be
/// probed by doubling them.  s_grid is ignored for the V kinds.
double symbol_bound_check(const SymbolBoundSpec& spec, double m,
                          const std::vector<double>& t_grid,
                          const std::vector<double>& s_grid,
                          const std::vector<double>& r_grid,
                          const SpecFunConfig& cfg = default_specfun_config());

}  // namespace tricomi

#endif  // TRICOMI_MULTIPLIER_HPP_
