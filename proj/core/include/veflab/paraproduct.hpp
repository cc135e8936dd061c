#pragma once

#include "veflab/dyadic.hpp"

namespace vefl {

// Bony decomposition of the pointwise product of two scalar fields:
// uv = T_u v + T_v u + R(u,v) with T_u v = sum_q S_{q-1}u Delta_q v and
// R(u,v) = sum_{|p-q|<=1} Delta_p u Delta_q v. Exact reconstruction
// requires both factors inside the partition's covered annulus and
// mean(u) * mean(v) = 0 (the mean-mean product belongs to no piece).
struct Paraproduct {
  SpectralField t_uv;
  SpectralField t_vu;
  SpectralField r_uv;
};

// throws if the factor bandwidths could alias on this grid
Paraproduct paraproduct(const DyadicPartition& part, const SpectralField& u,
                        const SpectralField& v);

// pointwise physical product of two scalar fields, returned spectrally
SpectralField pointwise_product(const SpectralField& u, const SpectralField& v);

}  // namespace vefl
