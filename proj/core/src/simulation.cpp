#include "veflab/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <vector>

#include "veflab/constraints.hpp"
#include "veflab/fft.hpp"
#include "veflab/initial_data.hpp"
#include "veflab/ops.hpp"
#include "veflab/rhs.hpp"
#include "veflab/stepper.hpp"

namespace vefl {

FlowState make_initial_state(GridPtr grid, const SimConfig& cfg) {
  if (cfg.init == "flowmap")
    return flowmap_initial_data(grid, cfg.seed, cfg.amplitude, cfg.pseudo_time,
                                cfg.pseudo_dt, cfg.dealias, cfg.flow_band_min,
                                cfg.flow_band_max);
  if (cfg.init == "oscillatory") {
    FlowState state(grid, 0.0);
    state.velocity =
        oscillatory_velocity(grid, cfg.epsilon, cfg.p_osc, cfg.envelope_power);
    return state;
  }
  if (cfg.init == "zero") return FlowState(grid, 0.0);
  throw std::invalid_argument("unknown init kind '" + cfg.init + "'");
}

namespace {

bool state_finite(const FlowState& s) {
  for (const SpectralField* f : {&s.velocity, &s.strain})
    for (int c = 0; c < f->components(); ++c)
      for (std::size_t i = 0; i < f->grid().modes(); ++i) {
        const auto& z = f->at(c, i);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
      }
  return true;
}

void sample(NormSeries& series, const DyadicPartition& part, const FlowState& state,
            const std::vector<double>& ps, double dealias_fraction) {
  series.times.push_back(state.time);
  append_block_norms(series, part, "v", state.velocity, ps);
  append_block_norms(series, part, "E", state.strain, ps);
  SpectralField div_e = divergence_tensor(state.strain);
  remove_mean(div_e);
  SpectralField c = lambda_power(div_e, -1.0);
  append_block_norms(series, part, "c", c, ps);

  series.grad_v_sup.push_back(grid_lp_norm(inverse_transform(gradient(state.velocity)),
                                           std::numeric_limits<double>::infinity()));
  ConstraintResiduals res = constraint_residuals(state, dealias_fraction);
  series.r_det.push_back(res.r_det);
  series.r_divT.push_back(res.r_divT);
  series.r_compat.push_back(res.r_compat);
  series.stress_gap.push_back(stress_form_gap(state.strain, dealias_fraction));
}

}  // namespace

SimResult run_simulation(const SimConfig& cfg, bool quiet) {
  if (cfg.dim != 2 && cfg.dim != 3)
    throw std::invalid_argument("run_simulation: dim must be 2 or 3");
  if (cfg.mu <= 0.0) throw std::invalid_argument("run_simulation: mu must be > 0");
  if (cfg.dt <= 0.0) throw std::invalid_argument("run_simulation: dt must be > 0");
  if (cfg.t_end < 0.0) throw std::invalid_argument("run_simulation: t_end must be >= 0");

  GridPtr grid = make_grid(cfg.dim, cfg.points, cfg.period);
  SimResult result(grid);
  result.initial_state = make_initial_state(grid, cfg);

  DyadicPartition part = build_partition(grid);
  result.series.q_min = part.q_min();
  result.series.q_max = part.q_max();
  std::vector<double> ps{2.0, cfg.p1, cfg.p2};
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  GreenTable table(grid, cfg.mu, cfg.dt);
  long long steps = static_cast<long long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  const long long stride = std::max<long long>(1, cfg.output_stride > 0 ? cfg.output_stride : steps);

  FlowState state = result.initial_state;
  sample(result.series, part, state, ps, cfg.dealias);

  for (long long n = 0; n < steps; ++n) {
    StepInfo info;
    FlowState next(grid);
    try {
      next = etd_step(state, table, cfg.dealias, cfg.nonlinear, &info);
    } catch (const std::runtime_error& err) {
      if (!quiet) std::cerr << "run aborted at t = " << state.time << ": " << err.what() << "\n";
      result.aborted = true;
      result.abort_time = state.time;
      break;
    }
    result.max_speed_seen = std::max(result.max_speed_seen, info.max_speed);
    if (info.cfl_warning && !result.cfl_warned) {
      result.cfl_warned = true;
      if (!quiet)
        std::cerr << "warning: advective CFL exceeded (max|v| dt / dx > 0.5) at t = "
                  << state.time << "\n";
    }
    if (!state_finite(next)) {
      if (!quiet) std::cerr << "run aborted at t = " << state.time << ": non-finite state\n";
      result.aborted = true;
      result.abort_time = state.time;
      break;
    }
    state = next;
    // keep the recorded time exact at multiples of dt
    state.time = (n + 1) * cfg.dt;
    ++result.steps_taken;
    if ((n + 1) % stride == 0 || n + 1 == steps) {
      sample(result.series, part, state, ps, cfg.dealias);
      if (!quiet)
        std::cerr << "t = " << state.time << " / " << cfg.t_end << "\n";
    }
  }
  result.final_state = state;
  return result;
}

}  // namespace vefl
