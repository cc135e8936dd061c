#pragma once

#include "veflab/field.hpp"

namespace vefl {

// Measured Bernstein ratios for a field spectrally supported in the
// q-annulus. k in {0, 1}; the k = 1 derivative magnitude is the
// pointwise Euclidean norm of the gradient (tight modewise realization
// of sup_{|alpha|=1}).
//   lower: ||D^k f||_{L^a} / (2^{qk} ||f||_{L^a})
//          (reverse-inequality side; within [3/4, 8/3] for k = 1, a = 2)
//   upper: ||D^k f||_{L^b} / (2^{q(k + N(1/a - 1/b))} ||f||_{L^a})
//          (direct-inequality side with the integrability gain)
struct BernsteinRatios {
  double lower;
  double upper;
};

BernsteinRatios bernstein_ratio(const SpectralField& f, int q, int k, double a,
                                double b);

}  // namespace vefl
