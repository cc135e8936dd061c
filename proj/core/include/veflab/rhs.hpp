#pragma once

#include "veflab/flow_state.hpp"

namespace vefl {

// Tendency pair matching the FlowState layout.
struct Tendencies {
  SpectralField dv;  // vector
  SpectralField dE;  // tensor

  explicit Tendencies(GridPtr grid)
      : dv(grid, Rank::vector), dE(grid, Rank::tensor) {}
};

// Quadratic terms only, every product dealiased:
//   dv = P( -v . grad v + E_jk d_j E_ik ),   dE = -v . grad E + (grad v) E
// with (grad v)_ij = d v_i / d x_j. The stress term uses the advective
// form E_jk d_j E_ik. Throws on non-finite values in the result.
Tendencies quadratic_tendencies(const FlowState& state, double dealias_fraction);

// Full tendency including the linear coupling and viscosity:
//   dv = P( -v . grad v + E_jk d_j E_ik + d_j E_ij ) + mu Lap v
//   dE = -v . grad E + (grad v) E + grad v
Tendencies nonlinear_rhs(const FlowState& state, double mu, double dealias_fraction);

// || d_j(E_jk E_ik) - E_jk d_j E_ik ||_2 / max(|| E_jk d_j E_ik ||_2, tiny):
// the two stress forms agree exactly when div E^T = 0, so this gap is a
// monitored residual of that constraint inside the quadratic terms.
double stress_form_gap(const SpectralField& strain, double dealias_fraction);

}  // namespace vefl
