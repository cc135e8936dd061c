#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "veflab/grid.hpp"

namespace vefl {

// Run parameters shared by the CLI, the driver, and the functional
// assembly. Defaults describe the seeded small-data run.
struct SimConfig {
  int dim = 2;
  int points = 128;        // samples per dimension
  double period = 2.0 * kPi;
  double mu = 1.0;

  double dt = 1e-3;
  double t_end = 10.0;
  int output_stride = 100;  // steps between recorded samples
  double dealias = 2.0 / 3.0;
  bool nonlinear = true;

  // initial data: "flowmap", "oscillatory", or "zero"
  std::string init = "flowmap";
  double amplitude = 1e-2;
  double pseudo_time = 1.0;
  double pseudo_dt = 1e-3;
  int flow_band_min = 1;
  int flow_band_max = 3;
  double epsilon = 0.125;
  double p_osc = 4.0;
  int envelope_power = 2;
  std::uint64_t seed = 0;

  // functional parameters
  double r0 = 0.0;  // 0 selects the default frequency split 2^round(log2(2/mu))
  double s = 0.0;
  double r = 1.0;
  double p1 = 2.0;
  double p2 = 4.0;
  double lambda1 = 1.0;

  double resolved_r0() const {
    if (r0 > 0.0) return r0;
    return std::exp2(std::round(std::log2(2.0 / mu)));
  }
};

}  // namespace vefl
