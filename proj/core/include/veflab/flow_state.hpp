#pragma once

#include "veflab/field.hpp"

namespace vefl {

// The pair (v, E) at a time instant. velocity is a vector field with
// ||xi . v^hat|| / ||v^hat|| <= 1e-12; strain is a dim x dim tensor
// field; both conjugate-symmetric.
struct FlowState {
  double time;
  SpectralField velocity;
  SpectralField strain;

  FlowState(GridPtr grid, double t = 0.0)
      : time(t), velocity(grid, Rank::vector), strain(grid, Rank::tensor) {}
};

}  // namespace vefl
