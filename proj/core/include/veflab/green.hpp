#pragma once

#include <array>
#include <complex>
#include <utility>

#include "veflab/field.hpp"

namespace vefl {

// Eigenvalues of the 2x2 mode matrix [[0, -|xi|], [|xi|, -mu |xi|^2]]
// of the coupled system c_t + Lambda v = 0, v_t - mu Lap v - Lambda c = 0:
// lambda_pm = -mu|xi|^2/2 +- sqrt(mu^2|xi|^4 - 4|xi|^2)/2.
struct EigenPair {
  std::complex<double> plus;
  std::complex<double> minus;
};

EigenPair eigenvalues(double mu, double xi);

// Entries of the exact mode propagator exp(t A) acting on (c, v):
//   [ g_cc  g_cv ]      g_cc = (l+ e^{l- t} - l- e^{l+ t}) / (l+ - l-)
//   [ g_vc  g_vv ]      g_cv = -|xi| (e^{l+ t} - e^{l- t}) / (l+ - l-)
//                       g_vc = -g_cv
//                       g_vv = (l+ e^{l+ t} - l- e^{l- t}) / (l+ - l-)
// The off-diagonal entries carry opposite signs (the mode matrix is
// antisymmetric in its coupling); their magnitudes agree. Near the
// double root mu|xi| = 2 the confluent limits are used.
struct GreenEntries {
  double g_cc, g_cv, g_vc, g_vv;
};

GreenEntries green_entries(double mu, double xi, double t);

// 2x2 product a.b for semigroup checks
GreenEntries compose(const GreenEntries& a, const GreenEntries& b);

// Remainders after peeling the leading high-frequency behavior
// (valid in the real-eigenvalue regime mu |xi| >= 2):
//   g1 = g_cv, g2_top = g_cc - e^{-t/mu}, g2_bot = g_vv - e^{-mu |xi|^2 t}
struct HighFreqParts {
  double g1, g2_top, g2_bot;
};

HighFreqParts highfreq_decompose(double mu, double xi, double t);

// Brute-force mode propagator by classical 4th-order steps; ground
// truth for green_entries. n_steps must be >= 100 t max(1, mu |xi|^2).
std::array<std::array<double, 2>, 2> mode_oracle(double mu, double xi, double t,
                                                 long n_steps);

// Modewise Green application to a divergence-free (c, v) pair.
std::pair<SpectralField, SpectralField> evolve_linear(const SpectralField& c0,
                                                      const SpectralField& v0, double mu,
                                                      double t);

}  // namespace vefl
