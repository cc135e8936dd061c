#pragma once

#include <cstdint>

#include "veflab/flow_state.hpp"

namespace vefl {

// Seeded divergence-free velocity, band-limited to lattice radii
// [band_lo, band_hi], zero mean, scaled so max pointwise speed equals
// `amplitude`. An empty band or amplitude 0 gives the zero field.
SpectralField seeded_solenoidal_velocity(GridPtr grid, std::uint64_t seed,
                                         double amplitude, double band_lo,
                                         double band_hi);

// Strain built by transporting E from zero along a frozen seeded
// band-limited divergence-free velocity u for `pseudo_time`:
//   dE/dtau = -u . grad E + (grad u) E + grad u
// integrated with RK4 steps of size pseudo_dt, quadratic products
// dealiased. The construction keeps det(I + E) = 1 and div E^T = 0 up
// to discretization error. The paired velocity is an independent
// seeded divergence-free field at the same amplitude.
// Throws if det(I + E) reaches zero anywhere (deformation too large).
FlowState flowmap_initial_data(GridPtr grid, std::uint64_t seed, double amplitude,
                               double pseudo_time, double pseudo_dt = 1e-3,
                               double dealias_fraction = 2.0 / 3.0,
                               int band_lo = 1, int band_hi = 3);

// Oscillatory velocity eps^(N/p - 1) sin(x_1 / eps) times a smooth
// product-cosine envelope, in every component, mean-removed and
// Leray-projected. 1/eps must be a lattice wavenumber of the grid
// below Nyquist; p must be >= the dimension N. If projection_defect is
// non-null it receives ||P v_raw - v_raw||_2 / ||v_raw||_2, the
// projection's bite out of the envelope profile.
SpectralField oscillatory_velocity(GridPtr grid, double epsilon, double p,
                                   int envelope_power = 2,
                                   double* projection_defect = nullptr);

}  // namespace vefl
