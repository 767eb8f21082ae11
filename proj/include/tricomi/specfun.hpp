// Special functions for the degenerate-wave propagator symbols: Gamma,
// modified Bessel I/K with derivatives, and the Kummer confluent
// hypergeometric function Phi(a,c;z) with its large-argument H+/H- split.
//
// Everything here is a pure function of its arguments; no hidden state.

#ifndef TRICOMI_SPECFUN_HPP_
#define TRICOMI_SPECFUN_HPP_

#include <complex>
#include <utility>

namespace tricomi {

using cplx = std::complex<double>;

/// Numerical policy for the series/asymptotic evaluators.
struct SpecFunConfig {
  double series_tol = 1e-14;   // relative term cutoff for power series
  int max_terms = 500;         // term cap before declaring non-convergence
  double asym_switch = 30.0;   // |z| above which I and Phi go asymptotic
  double integer_nu_eps = 1e-6;  // half-width of the K_nu integer-order band

  void validate() const;  // throws std::invalid_argument on a bad field
};

inline const SpecFunConfig& default_specfun_config() {
  static const SpecFunConfig cfg{};
  return cfg;
}

/// Gamma function, Lanczos g=7 with reflection for x < 1/2.
/// Relative error below 1e-13 on [-20, 50]; throws on 0, -1, -2, ...
double gamma_fn(double x);

/// 1/Gamma(x); returns 0 at the poles instead of throwing.
double rgamma(double x);

/// Modified Bessel function of the first kind, real order, z >= 0.
double bessel_i(double nu, double z,
                const SpecFunConfig& cfg = default_specfun_config());

/// Modified Bessel function of the second kind, z > 0.
/// Evaluated at |nu|; inside the integer_nu_eps band the two symmetric
/// offset orders are averaged (K is even and smooth in nu).
double bessel_k(double nu, double z,
                const SpecFunConfig& cfg = default_specfun_config());

/// d/dz I_nu(z) = I_{nu+1}(z) + (nu/z) I_nu(z).
double bessel_i_prime(double nu, double z,
                      const SpecFunConfig& cfg = default_specfun_config());

/// d/dz K_nu(z) = -K_{nu+1}(z) + (nu/z) K_nu(z).
double bessel_k_prime(double nu, double z,
                      const SpecFunConfig& cfg = default_specfun_config());

/// Arguments of Phi(a,c;z). c must stay away from 0, -1, -2, ...
struct KummerArgs {
  double a;
  double c;
  cplx z;
};

/// Kummer's confluent hypergeometric function Phi(a,c;z).
///
/// Power series (compensated, double-double accumulation) for
/// |z| <= asym_switch and for all real z; for larger z in the upper
/// half-plane the H+/H- asymptotic decomposition is used.
cplx kummer_phi(const KummerArgs& args,
                const SpecFunConfig& cfg = default_specfun_config());

/// n-th derivative: (a)_n/(c)_n * Phi(a+n, c+n; z).
cplx kummer_phi_deriv(const KummerArgs& args, int order,
                      const SpecFunConfig& cfg = default_specfun_config());

/// Truncated asymptotic sums H+(a,c;z), H-(a,c;z) for 0 < arg z < pi,
/// |z| > asym_switch, terms <= floor(|z|).  They reconstruct Phi through
///   Phi = Gamma(c)/Gamma(a) e^z H+  +  Gamma(c)/Gamma(c-a) H-.
std::pair<cplx, cplx> h_asym(double a, double c, cplx z, int terms,
                             const SpecFunConfig& cfg = default_specfun_config());

}  // namespace tricomi

#endif  // TRICOMI_SPECFUN_HPP_
