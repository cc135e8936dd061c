#pragma once

#include "veflab/flow_state.hpp"
#include "veflab/norm_series.hpp"
#include "veflab/sim_config.hpp"

namespace vefl {

struct SimResult {
  NormSeries series;
  FlowState initial_state;
  FlowState final_state;
  bool aborted = false;     // non-finite values appeared; final_state is the last valid one
  double abort_time = 0.0;  // meaningful when aborted
  bool cfl_warned = false;
  double max_speed_seen = 0.0;
  long long steps_taken = 0;

  explicit SimResult(GridPtr grid) : initial_state(grid), final_state(grid) {}
};

// Evolve the configured initial data with the exponential stepper,
// sampling block norms (v, E, c at p in {2, p1, p2}), the sup norm of
// grad v, the constraint residuals, and the stress-form gap at t = 0,
// every output_stride steps, and at t_end. A non-finite tendency stops
// the run and keeps the last valid state.
SimResult run_simulation(const SimConfig& cfg, bool quiet = true);

// Initial data selected by cfg.init ("flowmap", "oscillatory", "zero").
FlowState make_initial_state(GridPtr grid, const SimConfig& cfg);

}  // namespace vefl
