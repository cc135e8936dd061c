#pragma once

#include "veflab/flow_state.hpp"

namespace vefl {

// Pointwise and spectral residuals of the structural identities the
// strain must carry:
//   r_det    = || det(I + E) - 1 ||_inf                (volume preservation)
//   r_divT   = || d_j E_ji ||_2 / || E ||_2            (transposed divergence)
//   r_compat = aggregated L^2 residual of
//              d_m E_ij - d_j E_im = d_l (E_lj E_im - E_lm E_ij)
//              over independent (i, j < m), / || grad E ||_2
// Relative residuals report 0 for the zero strain.
struct ConstraintResiduals {
  double r_det;
  double r_divT;
  double r_compat;
};

ConstraintResiduals constraint_residuals(const FlowState& state,
                                         double dealias_fraction);

}  // namespace vefl
