#pragma once

#include "veflab/field.hpp"

namespace vefl {

// multiply by i*xi_j; the unpaired Nyquist row k_j = -M/2 is zeroed
SpectralField spectral_derivative(const SpectralField& f, int direction);

// multiply by -|xi|^2
SpectralField laplacian(const SpectralField& f);

// multiply by |xi|^s; zero mode -> 0 for s > 0, must already be
// (numerically) zero for s < 0, untouched for s = 0
SpectralField lambda_power(const SpectralField& f, double s);

// P = I - xi xi^T/|xi|^2 modewise; zero mode untouched
SpectralField leray_project(const SpectralField& u);

// (grad f)_ij = d f_i / d x_j ; scalar -> vector, vector -> tensor
SpectralField gradient(const SpectralField& f);

// (div T)_i = d_j T_ij
SpectralField divergence_tensor(const SpectralField& t);

// div v = d_i v_i
SpectralField divergence_vector(const SpectralField& v);

SpectralField transpose_tensor(const SpectralField& t);

// discrete L^p norm of the pointwise Euclidean magnitude across
// components, quadrature weight (L/M)^dim; p = inf -> max magnitude
double grid_lp_norm(const PhysicalField& f, double p);

// L^2 norm through Parseval: sqrt(V * sum |coef|^2)
double spectral_l2_norm(const SpectralField& f);

// max over modes of |coef(k) - conj(coef(-k))|
double conj_symmetry_error(const SpectralField& f);

// ||xi . v^hat||_2 / ||v^hat||_2 (0 for the zero field)
double divergence_rel_l2(const SpectralField& v);

// zero all modes with any |k_d| > floor(M*fraction/2)
void apply_dealias(SpectralField& f, double fraction);

void remove_mean(SpectralField& f);

}  // namespace vefl
