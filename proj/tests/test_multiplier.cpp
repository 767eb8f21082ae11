#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tricomi/multiplier.hpp"

using namespace tricomi;

namespace {
double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, i / (n - 1.0));
  return g;
}
}  // namespace

TEST_CASE("symbols: m = 0 reduces to the wave forms") {
  ModeSymbol ms{0.0, 1.0, 3.0};
  CHECK(std::abs(v1_symbol(ms) - std::cos(3.0)) < 1e-14);
  CHECK(std::abs(v2_symbol(ms) - std::sin(3.0) / 3.0) < 1e-14);
  ModeSymbol ms2{0.0, 0.7, 2.0};
  CHECK(std::abs(dt_v1_symbol(ms2) - (-2.0 * std::sin(1.4))) < 1e-14);
  CHECK(std::abs(dt_v2_symbol(ms2) - std::cos(1.4)) < 1e-14);
}

TEST_CASE("symbols: exact values at r = 0 and t = 0") {
  for (double m : {0.0, 0.5, 1.0, 2.0}) {
    CHECK(v1_symbol({m, 1.7, 0.0}) == cplx(1.0));
    CHECK(v2_symbol({m, 1.7, 0.0}) == cplx(1.7));
    CHECK(dt_v1_symbol({m, 1.7, 0.0}) == cplx(0.0));
    CHECK(dt_v2_symbol({m, 1.7, 0.0}) == cplx(1.0));
    for (double r : {0.5, 2.0, 40.0}) {
      CHECK(v1_symbol({m, 0.0, r}) == cplx(1.0));
      CHECK(v2_symbol({m, 0.0, r}) == cplx(0.0));
      CHECK(dt_v1_symbol({m, 0.0, r}) == cplx(0.0));
      CHECK(dt_v2_symbol({m, 0.0, r}) == cplx(1.0));
    }
  }
}

TEST_CASE("symbols: frozen references at m = 1 (50-digit Kummer evaluation)") {
  ModeSymbol ms{1.0, 1.0, 2.0};  // z = 2i
  CHECK(rel_err(v1_symbol(ms), cplx(0.68976658910004687265)) < 1e-12);
  CHECK(rel_err(v2_symbol(ms), cplx(0.81083036089899007909)) < 1e-12);
  CHECK(rel_err(dt_v1_symbol(ms), cplx(-1.1513252610257416608)) < 1e-12);
  CHECK(rel_err(dt_v2_symbol(ms), cplx(0.096366690038001748506)) < 1e-12);
  ModeSymbol ms2{1.0, 1.5, 2.0};  // z = 4.5i
  CHECK(rel_err(v1_symbol(ms2), cplx(-0.16340737617158325534)) < 1e-12);
  CHECK(rel_err(v2_symbol(ms2), cplx(0.3568867697541482987)) < 1e-12);
}

TEST_CASE("symbols: real-valuedness and constant Wronskian") {
  for (double m : {1e-6, 0.3, 1.0, 2.0}) {
    for (double t : {0.1, 0.5, 1.0, 3.0}) {
      for (double r : {0.1, 1.0, 5.0, 20.0, 80.0}) {
        ModeSymbol ms{m, t, r};
        cplx v1 = v1_symbol(ms), v2 = v2_symbol(ms);
        cplx d1 = dt_v1_symbol(ms), d2 = dt_v2_symbol(ms);
        double scale = std::abs(v1) + std::abs(v2) + std::abs(d1) + std::abs(d2);
        CHECK(std::abs(v1.imag()) < 1e-10 * scale);
        CHECK(std::abs(v2.imag()) < 1e-10 * scale);
        cplx w = v1 * d2 - v2 * d1;
        CHECK(std::abs(w - 1.0) < 1e-9);
      }
    }
  }
}

TEST_CASE("symbols: wave-limit continuity at m = 1e-6") {
  for (auto [t, r] : std::vector<std::pair<double, double>>{
           {0.5, 1.0}, {1.0, 2.0}, {2.0, 5.0}}) {
    ModeSymbol ms{1e-6, t, r};
    double ph = ms.phase() * r;
    CHECK(std::abs(v1_symbol(ms) - std::cos(ph)) < 1e-4);
    CHECK(std::abs(v2_symbol(ms) - std::sin(ph) / r) < 1e-4);
    CHECK(std::abs(dt_v1_symbol(ms) - (-r * std::sin(ph))) < 1e-4 * r);
    CHECK(std::abs(dt_v2_symbol(ms) - std::cos(ph)) < 1e-4);
  }
}

TEST_CASE("symbols: mode ODE residual via second differences") {
  for (double m : {0.3, 1.0, 2.0}) {
    for (double t : {0.4, 1.0, 2.5}) {
      for (double r : {0.5, 2.0, 10.0}) {
        double h = 0.01 / std::max(1.0, std::pow(t, m) * r);
        auto v1 = [&](double tt) {
          return v1_symbol({m, tt, r}).real();
        };
        double d2 = (v1(t + h) - 2.0 * v1(t) + v1(t - h)) / (h * h);
        double w = std::pow(t, 2.0 * m) * r * r;
        double res = d2 + w * v1(t);
        double scale = std::abs(d2) + w * std::abs(v1(t)) + 1.0;
        CHECK(std::abs(res) < 1e-5 * scale);
      }
    }
  }
}

TEST_CASE("symbols: t-derivative symbols match finite differences") {
  ModeSymbol ms{1.0, 1.3, 1.0};
  double h = 1e-5;
  cplx fd1 = (v1_symbol({1.0, 1.3 + h, 1.0}) - v1_symbol({1.0, 1.3 - h, 1.0})) /
             (2.0 * h);
  CHECK(std::abs(fd1 - dt_v1_symbol(ms)) < 1e-6);
  cplx fd2 = (v2_symbol({1.0, 1.3 + h, 1.0}) - v2_symbol({1.0, 1.3 - h, 1.0})) /
             (2.0 * h);
  CHECK(std::abs(fd2 - dt_v2_symbol(ms)) < 1e-6);
}

TEST_CASE("mode_oracle: wave case and Wronskian") {
  double tol = 1e-10;
  auto f = mode_oracle(0.0, 2.0, 1.5, tol);
  CHECK(std::abs(f.y1 - std::cos(3.0)) < 10.0 * tol);
  CHECK(std::abs(f.y2 - std::sin(3.0) / 2.0) < 10.0 * tol);
  CHECK(std::abs(f.y1 * f.y2p - f.y2 * f.y1p - 1.0) < 100.0 * tol);
  for (double m : {0.5, 1.0, 2.0}) {
    auto g = mode_oracle(m, 5.0, 2.0, tol);
    CHECK(std::abs(g.y1 * g.y2p - g.y2 * g.y1p - 1.0) < 100.0 * tol);
  }
}

TEST_CASE("mode_oracle: agreement with the symbols (this is the core check)") {
  for (double m : {0.5, 1.0, 2.0}) {
    for (double r : {0.5, 1.0, 2.0, 5.0, 20.0}) {
      for (double t : {0.3, 1.0, 3.0}) {
        auto f = mode_oracle(m, r, t, 1e-10);
        ModeSymbol ms{m, t, r};
        double scale1 = std::max(1.0, std::abs(f.y1));
        double scale2 = std::max(1.0, std::abs(f.y2));
        CHECK(std::abs(v1_symbol(ms).real() - f.y1) < 1e-6 * scale1);
        CHECK(std::abs(v2_symbol(ms).real() - f.y2) < 1e-6 * scale2);
        CHECK(std::abs(dt_v1_symbol(ms).real() - f.y1p) <
              1e-6 * std::max(1.0, std::abs(f.y1p)));
        CHECK(std::abs(dt_v2_symbol(ms).real() - f.y2p) <
              1e-6 * std::max(1.0, std::abs(f.y2p)));
      }
    }
  }
}

TEST_CASE("w_symbols: diagonal, wave identity, Wronskian on the diagonal") {
  // the Duhamel kernel vanishes identically on s = t
  for (double m : {0.0, 0.7, 1.0}) {
    WSymbols w = w_symbols(m, 1.2, 1.2, 3.0);
    CHECK(w.w2 - w.w1 == cplx(0.0));
  }
  // m = 0: W2 - W1 = sin((t-s) r)/r
  WSymbols w0 = w_symbols(0.0, 0.5, 1.0, 2.0);
  CHECK(std::abs((w0.w2 - w0.w1) - std::sin(1.0) / 2.0) < 1e-13);
  // d/dt (W2 - W1) at t -> s equals the Wronskian 1
  double s = 0.5, eps = 1e-6;
  WSymbols wd = w_symbols(1.0, s, s + eps, 1.0);
  CHECK(std::abs((wd.dt_w2 - wd.dt_w1) - 1.0) < 1e-5);
  CHECK_THROWS_AS(w_symbols(1.0, 2.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("symbol_bound_check: wave bound constant is 1") {
  auto t_grid = log_grid(0.1, 10.0, 40);
  auto r_grid = log_grid(0.1, 100.0, 60);
  double c = symbol_bound_check({SymbolKind::V1, 0.0}, 0.0, t_grid, {}, r_grid);
  CHECK(c <= 1.0 + 1e-12);
  CHECK(c > 0.95);
}

TEST_CASE("symbol_bound_check: finite and refinement-stable constants") {
  double m = 1.0, mu = 0.25;
  auto t1 = log_grid(0.1, 10.0, 24);
  auto r1 = log_grid(0.1, 100.0, 32);
  auto t2 = log_grid(0.1, 10.0, 48);
  auto r2 = log_grid(0.1, 100.0, 64);
  struct Case { SymbolKind kind; double sigma; };
  for (Case c : {Case{SymbolKind::V1, -mu}, Case{SymbolKind::V1, 0.0},
                 Case{SymbolKind::V2, mu - 1.0}, Case{SymbolKind::V2, 0.0},
                 Case{SymbolKind::DtV1, 1.0 - mu}, Case{SymbolKind::DtV1, 1.0},
                 Case{SymbolKind::DtV2, mu}}) {
    double c1 = symbol_bound_check({c.kind, c.sigma}, m, t1, {}, r1);
    double c2 = symbol_bound_check({c.kind, c.sigma}, m, t2, {}, r2);
    CHECK(std::isfinite(c1));
    CHECK(c1 > 0.0);
    CHECK(std::abs(c2 - c1) <= 0.1 * std::max(c1, c2));
  }
  auto s1 = log_grid(0.1, 10.0, 16);
  auto s2 = log_grid(0.1, 10.0, 32);
  for (Case c : {Case{SymbolKind::W1, -1.0}, Case{SymbolKind::W2, -1.0},
                 Case{SymbolKind::DtW1, 0.0}, Case{SymbolKind::DtW2, 0.0}}) {
    double c1 = symbol_bound_check({c.kind, c.sigma}, m, t1, s1, r1);
    double c2 = symbol_bound_check({c.kind, c.sigma}, m, t2, s2, r2);
    CHECK(std::isfinite(c1));
    CHECK(c1 > 0.0);
    CHECK(std::abs(c2 - c1) <= 0.1 * std::max(c1, c2));
  }
  CHECK_THROWS_AS(symbol_bound_check({SymbolKind::V1, 0.5}, m, t1, {}, r1),
                  std::invalid_argument);
  CHECK_THROWS_AS(symbol_bound_check({SymbolKind::V1, -0.3}, m, t1, {}, r1),
                  std::invalid_argument);
}
