#pragma once

#include "veflab/dyadic.hpp"

namespace vefl {

// homogeneous Besov descriptor: l^r over q of 2^{qs} ||Delta_q f||_{L^p}
struct BesovSpec {
  double s;
  double p;  // [1, inf]
  double r;  // [1, inf]
};

struct BesovResult {
  double value;
  // fraction of spectral energy (coefficient l^2 mass) not reproduced
  // by the truncated partition of unity, mean mode included
  double leaked_fraction;
};

BesovResult besov_norm(const SpectralField& f, const BesovSpec& spec,
                       const DyadicPartition& part);

// per-block L^p norms ||Delta_q f||_{L^p}, q from part.q_min() up
std::vector<double> block_lp_norms(const SpectralField& f, double p,
                                   const DyadicPartition& part);

// l^r accumulation of 2^{qs} n_q over q in [q_lo, q_hi] intersected
// with the partition range; n indexed from part.q_min()
double besov_accumulate(const std::vector<double>& n, double s, double r, int q_min,
                        int q_lo, int q_hi);

}  // namespace vefl
