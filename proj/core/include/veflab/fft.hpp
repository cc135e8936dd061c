#pragma once

#include "veflab/field.hpp"

namespace vefl {

// samples -> coefficients with the 1/M^dim normalization
SpectralField forward_transform(const PhysicalField& f);

// coefficients -> samples; the imaginary residue of the output must be
// below rel_imag_tol relative to the field magnitude (conjugate
// symmetry check), otherwise a contract violation is thrown.
PhysicalField inverse_transform(const SpectralField& f, double rel_imag_tol = 1e-12);

}  // namespace vefl
