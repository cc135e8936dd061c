#pragma once

#include "veflab/flow_state.hpp"
#include "veflab/green.hpp"
#include "veflab/rhs.hpp"

namespace vefl {

// Per-mode Green matrix entries for a fixed (grid, mu, dt), so a long
// run prices the matrix exponentials once.
class GreenTable {
public:
  GreenTable(GridPtr grid, double mu, double dt);

  const GreenEntries& at(std::size_t mode) const { return entries_[mode]; }
  const Grid& grid() const { return *grid_; }
  double mu() const { return mu_; }
  double dt() const { return dt_; }

private:
  GridPtr grid_;
  double mu_, dt_;
  std::vector<GreenEntries> entries_;
};

// Exact solution of the linear system over the table's time step,
// acting on (v, E): the contracted part c = Lambda^{-1} div E evolves
// through the Green matrix together with v, the remaining part of E is
// frozen, and E is reassembled afterwards.
FlowState linear_propagate(const FlowState& state, const GreenTable& table);
FlowState linear_propagate(const FlowState& state, double mu, double dt);

struct StepInfo {
  double max_speed = 0.0;
  bool cfl_warning = false;
};

// One step of the exponential two-stage scheme (Lawson trapezoidal):
//   N0 = N(u_n)
//   u* = G u_n + dt G N0
//   u_{n+1} = G u_n + (dt/2) (G N0 + N(u*))
// with G the exact linear propagator and N the dealiased quadratic
// tendencies. The velocity is re-projected after each stage. With
// nonlinear = false the step reduces to linear_propagate exactly.
// A step with max|v| dt / dx > 0.5 sets the info flag (and warns on
// stderr if no info sink is given).
FlowState etd_step(const FlowState& state, const GreenTable& table,
                   double dealias_fraction, bool nonlinear = true,
                   StepInfo* info = nullptr);

}  // namespace vefl
