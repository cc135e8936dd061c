#include "veflab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "veflab/bernstein.hpp"
#include "veflab/besov.hpp"
#include "veflab/constraints.hpp"
#include "veflab/decay.hpp"
#include "veflab/dyadic.hpp"
#include "veflab/fft.hpp"
#include "veflab/functionals.hpp"
#include "veflab/green.hpp"
#include "veflab/initial_data.hpp"
#include "veflab/ops.hpp"
#include "veflab/paraproduct.hpp"
#include "veflab/rng.hpp"
#include "veflab/simulation.hpp"
#include "veflab/stepper.hpp"

namespace vefl {

namespace {

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

SpectralField white_field(GridPtr grid, Rank rank, std::uint64_t seed) {
  PhysicalField ph(grid, rank);
  SplitMix64 rng(seed);
  for (auto& x : ph.data()) x = rng.normal();
  return forward_transform(ph);
}

// keep lattice radii in [lo, hi], drop unpaired Nyquist rows
void mask_band(SpectralField& f, double lo, double hi) {
  const Grid& g = f.grid();
  const int nyq = g.points_per_dim() / 2;
  for (std::size_t m = 0; m < g.modes(); ++m) {
    auto mi = g.unflatten(m);
    long long r2 = 0;
    bool keep = true;
    for (int d = 0; d < g.dim(); ++d) {
      long long k = g.lattice(mi[d]);
      if (k == -nyq) keep = false;
      r2 += k * k;
    }
    double r = std::sqrt(static_cast<double>(r2));
    if (r < lo || r > hi) keep = false;
    if (!keep)
      for (int c = 0; c < f.components(); ++c) f.at(c, m) = 0.0;
  }
}

double entries_rel_diff(const GreenEntries& g,
                        const std::array<std::array<double, 2>, 2>& o) {
  double scale = std::max({std::abs(o[0][0]), std::abs(o[0][1]),
                           std::abs(o[1][0]), std::abs(o[1][1]), 1e-300});
  double diff = std::max({std::abs(g.g_cc - o[0][0]), std::abs(g.g_cv - o[0][1]),
                          std::abs(g.g_vc - o[1][0]), std::abs(g.g_vv - o[1][1])});
  return diff / scale;
}

std::vector<double> sweep_xi(double mu) {
  return {0.1, 0.5, 1.0, 2.0 / mu, 4.0, 16.0, 64.0};
}

double state_diff(const FlowState& a, const FlowState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.velocity.data().size(); ++i)
    worst = std::max(worst, std::abs(a.velocity.data()[i] - b.velocity.data()[i]));
  for (std::size_t i = 0; i < a.strain.data().size(); ++i)
    worst = std::max(worst, std::abs(a.strain.data()[i] - b.strain.data()[i]));
  return worst;
}

}  // namespace

void print_criterion(std::ostream& out, const CriterionResult& r) {
  out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
  if (!r.details.empty()) out << "  (" << r.details << ")";
  out << "\n";
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

CriterionResult criterion_green_oracle() {
  const double tol = 1e-6;
  double worst = 0.0;
  for (double mu : {0.5, 1.0, 2.0}) {
    for (double xi : sweep_xi(mu)) {
      for (double t : {0.0, 0.1, 1.0, 10.0}) {
        long n = std::max<long>(
            100, static_cast<long>(
                     std::ceil(400.0 * t * std::max(1.0, mu * xi * xi))));
        auto oracle = mode_oracle(mu, xi, t, n);
        worst = std::max(worst,
                         entries_rel_diff(green_entries(mu, xi, t), oracle));
      }
    }
  }
  return {"green-matches-integrator", worst <= tol,
          "max rel err " + num(worst) + ", tol " + num(tol)};
}

CriterionResult criterion_semigroup() {
  const double tol = 1e-10;
  double worst = 0.0;
  bool identity_exact = true;
  for (double mu : {0.5, 1.0, 2.0}) {
    for (double xi : sweep_xi(mu)) {
      GreenEntries g0 = green_entries(mu, xi, 0.0);
      if (g0.g_cc != 1.0 || g0.g_cv != 0.0 || g0.g_vc != 0.0 || g0.g_vv != 1.0)
        identity_exact = false;
      for (double t1 : {0.1, 1.0, 10.0}) {
        for (double t2 : {0.1, 1.0, 10.0}) {
          GreenEntries whole = green_entries(mu, xi, t1 + t2);
          GreenEntries split =
              compose(green_entries(mu, xi, t1), green_entries(mu, xi, t2));
          double scale =
              std::max({std::abs(whole.g_cc), std::abs(whole.g_cv),
                        std::abs(whole.g_vc), std::abs(whole.g_vv), 1e-300});
          double diff = std::max({std::abs(whole.g_cc - split.g_cc),
                                  std::abs(whole.g_cv - split.g_cv),
                                  std::abs(whole.g_vc - split.g_vc),
                                  std::abs(whole.g_vv - split.g_vv)});
          worst = std::max(worst, diff / scale);
        }
      }
    }
  }
  return {"green-semigroup-identity", identity_exact && worst <= tol,
          std::string("t=0 exact: ") + (identity_exact ? "yes" : "no") +
              ", max composition err " + num(worst) + ", tol " + num(tol)};
}

CriterionResult criterion_low_block_decay() {
  const double mu = 0.25;
  const double spread_tol = 1.2;
  GridPtr grid = make_grid(2, 64, 8.0 * kPi);
  DyadicPartition part = build_partition(grid);
  SpectralField cw = white_field(grid, Rank::vector, 301);
  SpectralField vw = white_field(grid, Rank::vector, 302);
  double lo = 1e300, hi = 0.0;
  bool positive = true;
  std::string rates;
  for (int j = -2; j <= 0; ++j) {
    SpectralField cj = dyadic_block(part, cw, j);
    SpectralField vj = dyadic_block(part, vw, j);
    const double window = 3.0 / (mu * std::exp2(2.0 * j));
    const int n = 80;
    std::vector<double> times, norms;
    for (int i = 0; i <= n; ++i) {
      double t = window * i / n;
      auto [ct, vt] = evolve_linear(cj, vj, mu, t);
      times.push_back(t);
      norms.push_back(std::hypot(spectral_l2_norm(ct), spectral_l2_norm(vt)));
    }
    DecayFit fit = decay_fit(times, norms);
    double scaled = fit.theta_hat / std::exp2(2.0 * j);
    if (!(fit.theta_hat > 0.0)) positive = false;
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
    if (!rates.empty()) rates += " ";
    rates += num(scaled);
  }
  bool pass = positive && hi / lo <= spread_tol;
  return {"lowfreq-block-decay", pass,
          "theta/2^{2j} = {" + rates + "}, spread " + num(hi / lo) +
              ", tol " + num(spread_tol)};
}

CriterionResult criterion_high_block_decay() {
  const double mu = 1.0, r0 = 2.0;
  const double spread_tol = 1.2;
  GridPtr grid = make_grid(2, 128, 2.0 * kPi);
  DyadicPartition part = build_partition(grid);
  SpectralField cw = white_field(grid, Rank::vector, 401);
  SpectralField vw = white_field(grid, Rank::vector, 402);
  double lo = 1e300, hi = 0.0;
  bool positive = true;
  std::string rates;
  for (int j = 2; j <= 4; ++j) {
    SpectralField cj = dyadic_block(part, cw, j);
    SpectralField vj = dyadic_block(part, vw, j);
    const int n = 60;
    std::vector<double> times, norms;
    for (int i = 0; i <= n; ++i) {
      double t = mu * (1.0 + 3.0 * i / n);
      auto [ct, vt] = evolve_linear(cj, vj, mu, t);
      times.push_back(t);
      norms.push_back(spectral_l2_norm(ct));
    }
    DecayFit fit = decay_fit(times, norms);
    if (!(fit.theta_hat > 0.0)) positive = false;
    lo = std::min(lo, fit.theta_hat);
    hi = std::max(hi, fit.theta_hat);
    if (!rates.empty()) rates += " ";
    rates += num(fit.theta_hat);
  }
  double rate_spread = hi / lo;

  // scaled remainder envelopes across the dyadic sweep [2 r0, 64 r0]
  std::vector<double> tgrid;
  for (int i = 0; i < 40; ++i)
    tgrid.push_back(0.1 * mu * std::pow(100.0, i / 39.0));
  double min1 = 1e300, max1 = 0.0, min2t = 1e300, max2t = 0.0, min2b = 1e300,
         max2b = 0.0;
  for (double xi = 2.0 * r0; xi <= 64.0 * r0 * 1.0000001;
       xi *= std::pow(2.0, 0.125)) {
    double m1 = 0.0, m2t = 0.0, m2b = 0.0;
    for (double t : tgrid) {
      HighFreqParts p = highfreq_decompose(mu, xi, t);
      m1 = std::max(m1, std::abs(p.g1) * xi);
      m2t = std::max(m2t, std::abs(p.g2_top) * xi * xi);
      m2b = std::max(m2b, std::abs(p.g2_bot) * xi * xi);
    }
    min1 = std::min(min1, m1);
    max1 = std::max(max1, m1);
    min2t = std::min(min2t, m2t);
    max2t = std::max(max2t, m2t);
    min2b = std::min(min2b, m2b);
    max2b = std::max(max2b, m2b);
  }
  double drift = std::max({max1 / min1, max2t / min2t, max2b / min2b});
  bool pass = positive && rate_spread <= spread_tol && drift < spread_tol &&
              max1 > 0.0;
  return {"highfreq-uniform-decay", pass,
          "c rates = {" + rates + "}, spread " + num(rate_spread) +
              ", envelope drift " + num(drift) + ", tol " + num(spread_tol)};
}

CriterionResult criterion_lp_toolkit() {
  GridPtr grid = make_grid(2, 64, 2.0 * kPi);
  DyadicPartition part = build_partition(grid);
  const Grid& g = *grid;

  // partition of unity over the covered annulus
  const double cov_lo = (4.0 / 3.0) * std::exp2(part.q_min());
  const double cov_hi = 0.75 * std::exp2(part.q_max() + 1);
  double pou = 0.0;
  for (std::size_t m = 0; m < g.modes(); ++m) {
    double r = g.wavenumber(m);
    if (r < cov_lo || r > cov_hi) continue;
    pou = std::max(pou, std::abs(part.residual()[m]));
  }

  // Bony reconstruction on a seeded 100-pair corpus
  double bony = 0.0;
  for (int pair = 0; pair < 100; ++pair) {
    SpectralField u = white_field(grid, Rank::scalar, 3000 + 2 * pair);
    SpectralField v = white_field(grid, Rank::scalar, 3001 + 2 * pair);
    remove_mean(u);
    remove_mean(v);
    mask_band(u, 1.0, 12.0);
    mask_band(v, 1.0, 12.0);
    Paraproduct para = paraproduct(part, u, v);
    SpectralField sum = para.t_uv;
    axpy(1.0, para.t_vu, sum);
    axpy(1.0, para.r_uv, sum);
    SpectralField prod = pointwise_product(u, v);
    axpy(-1.0, prod, sum);
    PhysicalField up = inverse_transform(u);
    PhysicalField vp = inverse_transform(v);
    double scale = grid_lp_norm(up, std::numeric_limits<double>::infinity()) *
                   grid_lp_norm(vp, std::numeric_limits<double>::infinity());
    PhysicalField gap = inverse_transform(sum);
    bony = std::max(
        bony, grid_lp_norm(gap, std::numeric_limits<double>::infinity()) / scale);
  }

  // Bernstein window for annulus fields, gradient vs 2^q at p = 2
  double bern_lo = 1e300, bern_hi = 0.0;
  for (std::uint64_t seed = 501; seed <= 505; ++seed) {
    SpectralField f = white_field(grid, Rank::scalar, seed);
    for (int q = 1; q <= 3; ++q) {
      SpectralField fq = dyadic_block(part, f, q);
      BernsteinRatios ratios = bernstein_ratio(fq, q, 1, 2.0, 2.0);
      bern_lo = std::min(bern_lo, ratios.lower);
      bern_hi = std::max(bern_hi, ratios.lower);
    }
  }
  bool bern_ok = bern_lo >= 0.75 && bern_hi <= 8.0 / 3.0;

  bool pass = pou < 1e-12 && bony < 1e-10 && bern_ok;
  return {"partition-bony-bernstein", pass,
          "pou " + num(pou) + " (tol 1e-12), bony " + num(bony) +
              " (tol 1e-10), bernstein [" + num(bern_lo) + ", " + num(bern_hi) +
              "] in [0.75, 2.67]"};
}

CriterionResult criterion_constraint_transport() {
  const double mu = 1.0, T = 10.0, amplitude = 1e-2;
  const double resid_tol = 1e-5;
  const double ratio_lo = 3.5, ratio_hi = 4.5;
  const double dealias = 2.0 / 3.0;
  GridPtr grid = make_grid(2, 128, 2.0 * kPi);
  FlowState init = flowmap_initial_data(grid, 42, amplitude, 1.0, 2e-3);
  ConstraintResiduals base = constraint_residuals(init, dealias);

  // the primary run is the finer one; the coarse companion only feeds
  // the step-halving comparison
  const double dts[2] = {1e-3, 5e-4};
  double growth[2] = {0.0, 0.0};
  double worst = std::max({base.r_det, base.r_divT, base.r_compat});
  for (int run = 0; run < 2; ++run) {
    const double dt = dts[run];
    const long long steps = std::llround(T / dt);
    const long long stride = steps / 20;
    GreenTable table(grid, mu, dt);
    FlowState state = init;
    state.time = 0.0;
    ConstraintResiduals last = base;
    for (long long n = 0; n < steps; ++n) {
      StepInfo info;
      state = etd_step(state, table, dealias, true, &info);
      if ((n + 1) % stride == 0 || n + 1 == steps) {
        last = constraint_residuals(state, dealias);
        if (run == 1)
          worst = std::max({worst, last.r_det, last.r_divT, last.r_compat});
      }
    }
    growth[run] = std::max(0.0, last.r_det - base.r_det) +
                  std::max(0.0, last.r_divT - base.r_divT) +
                  std::max(0.0, last.r_compat - base.r_compat);
  }
  double ratio = growth[1] > 0.0 ? growth[0] / growth[1] : 0.0;
  bool pass = worst < resid_tol && ratio >= ratio_lo && ratio <= ratio_hi;
  return {"constraint-transport", pass,
          "max residual " + num(worst) + " (tol " + num(resid_tol) +
              "), halving growth ratio " + num(ratio) + " in [" +
              num(ratio_lo) + ", " + num(ratio_hi) + "]"};
}

CriterionResult criterion_scaling() {
  const double tol = 1e-3;
  GridPtr coarse = make_grid(2, 64, 2.0 * kPi);
  GridPtr fine = make_grid(2, 64, kPi);
  DyadicPartition part_c = build_partition(coarse);
  DyadicPartition part_f = build_partition(fine);
  const BesovSpec critical{0.0, 2.0, 1.0};  // N/2 - 1 = 0 in dimension 2
  double worst = 0.0;
  for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
    SpectralField v = seeded_solenoidal_velocity(coarse, seed, 1.0, 1.0, 8.0);
    SpectralField w(fine, Rank::vector);
    for (std::size_t i = 0; i < v.data().size(); ++i)
      w.data()[i] = 2.0 * v.data()[i];  // w(x) = 2 v(2x) on the nested box
    double nc = besov_norm(v, critical, part_c).value;
    double nf = besov_norm(w, critical, part_f).value;
    worst = std::max(worst, std::abs(nf - nc) / nc);
  }
  return {"critical-norm-scaling", worst <= tol,
          "max rel mismatch " + num(worst) + ", tol " + num(tol)};
}

CriterionResult criterion_oscillatory() {
  GridPtr grid = make_grid(2, 128, 2.0 * kPi);
  DyadicPartition part = build_partition(grid);
  const BesovSpec super{-0.6, 2.0, 1.0};
  const BesovSpec critical{0.0, 2.0, 1.0};
  double n_super[3], n_crit[3];
  const double eps[3] = {0.25, 0.125, 0.0625};
  for (int i = 0; i < 3; ++i) {
    SpectralField v = oscillatory_velocity(grid, eps[i], 4.0, 2);
    n_super[i] = besov_norm(v, super, part).value;
    n_crit[i] = besov_norm(v, critical, part).value;
  }
  bool monotone = n_super[0] > n_super[1] && n_super[1] > n_super[2];
  double f1 = n_crit[1] / n_crit[0];
  double f2 = n_crit[2] / n_crit[0];
  bool pinned = f1 >= 0.5 && f1 <= 2.0 && f2 >= 0.5 && f2 <= 2.0;
  return {"oscillatory-norm-decrease", monotone && pinned,
          "supercritical {" + num(n_super[0]) + " " + num(n_super[1]) + " " +
              num(n_super[2]) + "} decreasing: " + (monotone ? "yes" : "no") +
              ", critical factors {" + num(f1) + " " + num(f2) +
              "} in [0.5, 2]"};
}

CriterionResult criterion_boundedness() {
  const double kLambda1 = 1.0;
  const double kPassRatio = 1.5;
  SimConfig cfg;
  cfg.dim = 2;
  cfg.points = 128;
  cfg.period = 16.0 * kPi;
  cfg.mu = 4.0;
  cfg.dt = 5e-3;
  cfg.t_end = 10.0;
  cfg.output_stride = 100;
  cfg.init = "flowmap";
  cfg.amplitude = 1e-2;
  cfg.pseudo_time = 1.0;
  cfg.pseudo_dt = 2e-3;
  cfg.flow_band_min = 1;
  cfg.flow_band_max = 3;
  cfg.s = 0.0;
  cfg.r = 1.0;
  cfg.p1 = 2.0;
  cfg.p2 = 4.0;
  cfg.r0 = 0.0;
  double worst_ratio = 0.0, worst_sup = 0.0;
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    cfg.seed = seed;
    SimResult res = run_simulation(cfg);
    if (res.aborted) {
      ok = false;
      break;
    }
    FunctionalParams fp{cfg.s, cfg.r, cfg.p1, cfg.p2, cfg.resolved_r0(),
                        cfg.dim};
    FunctionalReport report = assemble_report(res.series, fp);
    BoundednessVerdict verdict = boundedness_report(report, kLambda1, kPassRatio);
    ok = ok && verdict.bounded && verdict.hypothesis_ok && !verdict.rest_state;
    worst_ratio = std::max({worst_ratio, verdict.ratio_p1, verdict.ratio_p2});
    worst_sup = std::max(worst_sup, verdict.sup_x_p2);
  }
  return {"functional-boundedness", ok,
          "5-seed corpus, worst sup X_p / X_p(0) = " + num(worst_ratio) +
              " (tol " + num(kPassRatio) + "), sup X_p2 = " + num(worst_sup) +
              " <= lambda1 = " + num(kLambda1)};
}

CriterionResult criterion_stepper() {
  // exact linear reduction
  GridPtr small = make_grid(2, 32, 2.0 * kPi);
  FlowState lin_state = flowmap_initial_data(small, 9, 0.05, 0.5, 2e-3);
  GreenTable lin_table(small, 0.7, 0.01);
  FlowState via_step = etd_step(lin_state, lin_table, 2.0 / 3.0, false);
  FlowState via_green = linear_propagate(lin_state, lin_table);
  double lin_gap = state_diff(via_step, via_green);

  // self-convergence order against halved steps at T = 1
  GridPtr grid = make_grid(2, 64, 2.0 * kPi);
  FlowState init = flowmap_initial_data(grid, 5, 0.05, 1.0, 2e-3);
  const double T = 1.0, mu = 1.0;
  FlowState finals[3] = {FlowState(grid), FlowState(grid), FlowState(grid)};
  const double dts[3] = {4e-3, 2e-3, 1e-3};
  for (int i = 0; i < 3; ++i) {
    GreenTable table(grid, mu, dts[i]);
    FlowState state = init;
    long long steps = std::llround(T / dts[i]);
    for (long long n = 0; n < steps; ++n)
      state = etd_step(state, table, 2.0 / 3.0, true);
    finals[i] = state;
  }
  auto dist = [](const FlowState& a, const FlowState& b) {
    SpectralField dv = a.velocity;
    axpy(-1.0, b.velocity, dv);
    SpectralField de = a.strain;
    axpy(-1.0, b.strain, de);
    return std::hypot(spectral_l2_norm(dv), spectral_l2_norm(de));
  };
  double e1 = dist(finals[0], finals[1]);
  double e2 = dist(finals[1], finals[2]);
  double order = std::log2(e1 / e2);
  bool pass = lin_gap <= 1e-12 && order >= 1.9;
  return {"stepper-linear-order", pass,
          "linear-path gap " + num(lin_gap) + " (tol 1e-12), order " +
              num(order) + " >= 1.9"};
}

std::vector<CriterionResult> verify_green_suite() {
  return {criterion_green_oracle(), criterion_semigroup(),
          criterion_low_block_decay(), criterion_high_block_decay()};
}

std::vector<CriterionResult> verify_lp_suite() {
  return {criterion_lp_toolkit(), criterion_scaling(), criterion_oscillatory()};
}

std::vector<CriterionResult> verify_constraint_suite() {
  return {criterion_constraint_transport(), criterion_stepper()};
}

}  // namespace vefl
