// Double-double (error-carrying pair) arithmetic used by the power-series
// summations whose purely imaginary arguments cause heavy cancellation.
// Standard error-free transforms: Knuth two-sum, fma-based two-product.

#ifndef TRICOMI_DD_REAL_HPP_
#define TRICOMI_DD_REAL_HPP_

#include <cmath>

namespace tricomi::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  dd(double h) : hi(h) {}
  dd(double h, double l) : hi(h), lo(l) {}
  double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd add(const dd& a, const dd& b) {
  dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd sub(const dd& a, const dd& b) { return add(a, {-b.hi, -b.lo}); }

inline dd mul(const dd& a, double b) {
  dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline dd mul(const dd& a, const dd& b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd div(const dd& a, double b) {
  double q1 = a.hi / b;
  dd p = two_prod(q1, b);
  double q2 = ((a.hi - p.hi) + (a.lo - p.lo)) / b;
  return quick_two_sum(q1, q2);
}

// Complex value carried as two double-double components.
struct ddc {
  dd re, im;

  ddc() = default;
  ddc(dd r, dd i) : re(r), im(i) {}
  ddc(double r, double i) : re(r), im(i) {}
};

inline ddc add(const ddc& a, const ddc& b) {
  return {add(a.re, b.re), add(a.im, b.im)};
}

inline ddc mul(const ddc& a, double b) { return {mul(a.re, b), mul(a.im, b)}; }

inline ddc div(const ddc& a, double b) { return {div(a.re, b), div(a.im, b)}; }

// a * (x + iy) with double components x, y.
inline ddc mul(const ddc& a, double x, double y) {
  dd re = sub(mul(a.re, x), mul(a.im, y));
  dd im = add(mul(a.re, y), mul(a.im, x));
  return {re, im};
}

}  // namespace tricomi::detail

#endif  // TRICOMI_DD_REAL_HPP_
