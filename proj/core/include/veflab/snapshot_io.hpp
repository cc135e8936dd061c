#pragma once

#include <string>

#include "veflab/flow_state.hpp"

namespace vefl {

// Binary state snapshot, format tag "VEC1":
//   bytes 0..3   magic "VEC1"
//   u32          dim
//   u32          points per dimension
//   f64          period
//   f64          mu
//   f64          time
//   f64 pairs    velocity coefficients (re, im), component-major,
//                modes in flat row-major order
//   f64 pairs    strain coefficients, same layout
// All integers and doubles are little-endian. The payload is the raw
// coefficient array, so a write/read round trip is bit-exact.
struct Snapshot {
  FlowState state;
  double mu;
};

void write_snapshot(const FlowState& state, double mu, const std::string& path);
Snapshot read_snapshot(const std::string& path);

}  // namespace vefl
