#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "test_util.hpp"
#include "veflab/functionals.hpp"

using namespace vefl;

namespace {

// hand-built series: blocks q in [q_min, q_max], fields v/E/c at the
// given p values, every norm zero unless set explicitly
NormSeries empty_series(int q_min, int q_max, const std::vector<double>& times,
                        const std::vector<double>& ps) {
  NormSeries s;
  s.q_min = q_min;
  s.q_max = q_max;
  s.times = times;
  for (const char* f : {"v", "E", "c"})
    for (double p : ps) {
      BlockSeries& b = s.require(f, p);
      for (auto& col : b.by_block) col.assign(times.size(), 0.0);
    }
  s.grad_v_sup.assign(times.size(), 0.0);
  s.r_det.assign(times.size(), 0.0);
  s.r_divT.assign(times.size(), 0.0);
  s.r_compat.assign(times.size(), 0.0);
  s.stress_gap.assign(times.size(), 0.0);
  return s;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = a + (b - a) * i / (n - 1);
  return t;
}

FunctionalParams params_with(double s, double r, double r0) {
  FunctionalParams p;
  p.s = s;
  p.r = r;
  p.r0 = r0;
  return p;
}

}  // namespace

TEST_CASE("zero series gives identically zero functionals") {
  NormSeries s = empty_series(-1, 4, linspace(0.0, 2.0, 9), {2.0, 4.0});
  FunctionalReport rep = assemble_report(s, params_with(0.0, 1.0, 2.0));
  for (double v : rep.y_s) CHECK(v == 0.0);
  for (double v : rep.z_p1) CHECK(v == 0.0);
  for (double v : rep.z_p2) CHECK(v == 0.0);
  for (double v : rep.x_p2) CHECK(v == 0.0);
  for (double v : rep.u_tilde) CHECK(v == 0.0);
  CHECK(rep.x0_p1 == 0.0);
  CHECK(rep.y0 == 0.0);
}

TEST_CASE("single constant low block: Y follows a + b t + c sqrt(t) exactly") {
  // one strain block at q = 0 with constant norm n0, r0 = 2 so q <= 1 is low
  const double n0 = 0.75, s_reg = -0.25, r0 = 2.0;
  NormSeries s = empty_series(-2, 3, linspace(0.0, 2.0, 201), {2.0, 4.0});
  BlockSeries& e2 = s.require("E", 2.0);
  e2.by_block[0 - s.q_min].assign(s.times.size(), n0);

  std::vector<double> y = functional_Y(s, s_reg, 1.0, r0);
  // L~2 over (0,t) of a constant is n0 sqrt(t) (trapezoid on the square
  // is exact for constants), L~1 gives n0 t, L~inf gives n0
  const double a = std::exp2(0.0 * (s_reg + 1.0)) * n0;  // q = 0 weights are 1
  const double b = n0;                                   // 2^{q(s+2)} at q=0
  const double c = n0;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    double t = s.times[i];
    double expect = a + b * t + c * std::sqrt(t);
    CHECK(y[i] == doctest::Approx(expect).epsilon(1e-12));
  }

  // at t -> 0+ only the running-sup terms survive
  CHECK(y[0] == doctest::Approx(n0).epsilon(1e-14));
}

TEST_CASE("t -> 0+ keeps only instantaneous norms, with the Y0 weights differing") {
  // strain in a low block at q = -1 and velocity at q = 2
  NormSeries s = empty_series(-2, 3, linspace(0.0, 1.0, 11), {2.0, 4.0});
  const double ne = 0.4, nv = 0.3, s_reg = 0.5, r0 = 2.0;
  s.require("E", 2.0).by_block[-1 - s.q_min].assign(s.times.size(), ne);
  s.require("v", 2.0).by_block[2 - s.q_min].assign(s.times.size(), nv);

  std::vector<double> y = functional_Y(s, s_reg, 1.0, r0);
  // Y(0) = 2^{q(s+1)} ne + 2^{q s} nv at the occupied blocks
  double expect0 = std::exp2(-1.0 * (s_reg + 1.0)) * ne + std::exp2(2.0 * s_reg) * nv;
  CHECK(y[0] == doctest::Approx(expect0).epsilon(1e-13));

  // the initial-data functional weighs the low strain at s, not s+1
  double y0 = initial_Y(s, s_reg, 1.0, r0);
  double expect_init = std::exp2(-1.0 * s_reg) * ne + std::exp2(2.0 * s_reg) * nv;
  CHECK(y0 == doctest::Approx(expect_init).epsilon(1e-13));
}

TEST_CASE("Z vanishes when all data sits at or below the split") {
  NormSeries s = empty_series(-2, 4, linspace(0.0, 1.0, 21), {2.0, 4.0});
  // r0 = 4 -> j0 = 2; occupy q = -1, 0, 2 only
  for (int q : {-1, 0, 2}) {
    s.require("E", 4.0).by_block[q - s.q_min].assign(s.times.size(), 1.0);
    s.require("v", 4.0).by_block[q - s.q_min].assign(s.times.size(), 0.5);
  }
  std::vector<double> z = functional_Z(s, 4.0, 4.0, 2);
  for (double v : z) CHECK(v == 0.0);
  CHECK(initial_Z(s, 4.0, 4.0, 2) == 0.0);
}

TEST_CASE("single high block: Z matches the hand-built one-block expression") {
  // block q = 3 above r0 = 2, exponentially decaying E and v norms
  const double r0 = 2.0, p = 4.0;
  const int dim = 2, q = 3;
  const double np = dim / p;
  auto times = linspace(0.0, 1.5, 301);
  NormSeries s = empty_series(-1, 4, times, {2.0, 4.0});
  std::vector<double> en(times.size()), vn(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    en[i] = 0.9 * std::exp(-2.0 * times[i]);
    vn[i] = 0.2 * std::exp(-1.0 * times[i]);
  }
  s.require("E", p).by_block[q - s.q_min] = en;
  s.require("v", p).by_block[q - s.q_min] = vn;

  std::vector<double> z = functional_Z(s, p, r0, dim);
  // L~inf terms are the running sup = initial value (decaying); L~1
  // terms are trapezoid integrals of the block norm
  double t = times.back();
  double int_e = 0.9 * (1.0 - std::exp(-2.0 * t)) / 2.0;
  double int_v = 0.2 * (1.0 - std::exp(-1.0 * t)) / 1.0;
  double expect = std::exp2(q * np) * (0.9 + int_e) +
                  std::exp2(q * (np - 1.0)) * 0.2 + std::exp2(q * (np + 1.0)) * int_v;
  CHECK(z.back() == doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("assembly identity, monotonicity, and homogeneity") {
  // a generically occupied series with seeded norms
  auto times = linspace(0.0, 2.0, 41);
  NormSeries s = empty_series(-2, 4, times, {2.0, 3.0});
  vefl::SplitMix64 rng(99);
  for (const char* f : {"v", "E"})
    for (double p : {2.0, 3.0})
      for (int q = s.q_min; q <= s.q_max; ++q) {
        double base = 0.1 + rng.uniform();
        double rate = 0.3 * rng.uniform();
        auto& col = s.require(f, p).by_block[q - s.q_min];
        for (std::size_t i = 0; i < times.size(); ++i)
          col[i] = base * std::exp(-rate * times[i]);
      }
  for (std::size_t i = 0; i < times.size(); ++i)
    s.grad_v_sup[i] = 0.2 + 0.1 * std::sin(times[i]);

  FunctionalParams par;
  par.s = 0.0;
  par.r = 1.0;
  par.p1 = 2.0;
  par.p2 = 3.0;
  par.r0 = 2.0;
  FunctionalReport rep = assemble_report(s, par);

  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(rep.x_p1[i] == rep.y_s[i] + rep.z_p1[i]);
    CHECK(rep.x_p2[i] == rep.y_s[i] + rep.z_p2[i]);
    if (i > 0) {
      CHECK(rep.y_s[i] >= rep.y_s[i - 1]);
      CHECK(rep.z_p1[i] >= rep.z_p1[i - 1]);
      CHECK(rep.x_p2[i] >= rep.x_p2[i - 1]);
      CHECK(rep.u_tilde[i] >= rep.u_tilde[i - 1]);
    }
  }
  CHECK(rep.u_tilde[0] == 0.0);
  CHECK(rep.x0_p1 == rep.y0 + rep.z0_p1);

  // doubling every recorded norm doubles every functional bit-exactly
  NormSeries s2 = s;
  for (auto& bs : s2.blocks)
    for (auto& col : bs.by_block)
      for (double& v : col) v *= 2.0;
  for (double& v : s2.grad_v_sup) v *= 2.0;
  FunctionalReport rep2 = assemble_report(s2, par);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(rep2.x_p1[i] == 2.0 * rep.x_p1[i]);
    CHECK(rep2.y_s[i] == 2.0 * rep.y_s[i]);
    CHECK(rep2.u_tilde[i] == 2.0 * rep.u_tilde[i]);
  }
  CHECK(rep2.x0_p2 == 2.0 * rep.x0_p2);
}

TEST_CASE("s-window warning flags the out-of-range regularity index") {
  NormSeries s = empty_series(-1, 3, linspace(0.0, 1.0, 5), {2.0, 4.0});
  // dim 2, r = 1: admissible is (-1, 0]
  CHECK_FALSE(assemble_report(s, params_with(0.0, 1.0, 2.0)).s_window_warning);
  CHECK_FALSE(assemble_report(s, params_with(-0.5, 1.0, 2.0)).s_window_warning);
  CHECK(assemble_report(s, params_with(-1.0, 1.0, 2.0)).s_window_warning);
  CHECK(assemble_report(s, params_with(0.3, 1.0, 2.0)).s_window_warning);
  // r > 1 closes the right endpoint
  FunctionalParams pr = params_with(0.0, 2.0, 2.0);
  CHECK(assemble_report(s, pr).s_window_warning);
}

TEST_CASE("boundedness verdict: rest state, ratios, hypothesis") {
  NormSeries zero = empty_series(-1, 3, linspace(0.0, 1.0, 5), {2.0, 4.0});
  FunctionalReport rest = assemble_report(zero, params_with(0.0, 1.0, 2.0));
  BoundednessVerdict rv = boundedness_report(rest, 0.5);
  CHECK(rv.rest_state);
  CHECK(rv.bounded);

  // growing series: ratio above the pass constant must fail
  NormSeries s = empty_series(-1, 3, linspace(0.0, 1.0, 21), {2.0, 4.0});
  auto& col = s.require("v", 2.0).by_block[2 - s.q_min];
  for (std::size_t i = 0; i < s.times.size(); ++i) col[i] = 0.1;
  auto& ce = s.require("E", 2.0).by_block[0 - s.q_min];
  for (std::size_t i = 0; i < s.times.size(); ++i) ce[i] = 0.1;
  FunctionalReport rep = assemble_report(s, params_with(0.0, 1.0, 2.0));
  BoundednessVerdict v = boundedness_report(rep, 10.0);
  CHECK_FALSE(v.rest_state);
  CHECK(v.ratio_p1 > 1.0);  // cumulative terms keep growing
  CHECK(v.hypothesis_ok);
  BoundednessVerdict tight = boundedness_report(rep, 1e-9);
  CHECK_FALSE(tight.hypothesis_ok);

  // constant-in-time instantaneous norms grow the cumulative terms
  // linearly, so a long window must eventually break the 1.5 ratio
  CHECK_FALSE(boundedness_report(rep, 10.0, 1.01).bounded);
}

TEST_CASE("report copies residual series through") {
  NormSeries s = empty_series(-1, 3, linspace(0.0, 1.0, 5), {2.0, 4.0});
  s.r_det.assign(5, 1e-9);
  s.r_compat.assign(5, 2e-8);
  FunctionalReport rep = assemble_report(s, params_with(0.0, 1.0, 2.0));
  CHECK(rep.r_det.size() == 5);
  CHECK(rep.r_det[3] == 1e-9);
  CHECK(rep.r_compat[4] == 2e-8);
}
