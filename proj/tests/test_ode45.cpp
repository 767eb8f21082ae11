#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tricomi/ode45.hpp"

using namespace tricomi;

TEST_CASE("ode45: exponential growth") {
  OdeRhs rhs = [](double, const double* y, double* dy) { dy[0] = y[0]; };
  Ode45Options opt;
  opt.tol = 1e-11;
  auto y = ode45_integrate(rhs, 0.0, {1.0}, 2.0, opt);
  CHECK(std::abs(y[0] - std::exp(2.0)) < 1e-9 * std::exp(2.0));
}

TEST_CASE("ode45: harmonic oscillator round trip") {
  OdeRhs rhs = [](double, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
  };
  Ode45Options opt;
  opt.tol = 1e-12;
  auto y = ode45_integrate(rhs, 0.0, {1.0, 0.0}, 2.0 * M_PI, opt);
  CHECK(std::abs(y[0] - 1.0) < 1e-9);
  CHECK(std::abs(y[1]) < 1e-9);
}

TEST_CASE("ode45: step underflow reported") {
  // blow-up inside the interval forces the controller below h_min
  OdeRhs rhs = [](double, const double* y, double* dy) {
    dy[0] = y[0] * y[0];
  };
  CHECK_THROWS_AS(ode45_integrate(rhs, 0.0, {1.0}, 2.0), std::runtime_error);
}
