#include "veflab/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "veflab/fft.hpp"
#include "veflab/ops.hpp"

namespace vefl {

namespace {

double det_residual(const SpectralField& strain) {
  const Grid& g = strain.grid();
  const int n = g.dim();
  PhysicalField e = inverse_transform(strain);
  double worst = 0.0;
  for (std::size_t x = 0; x < g.modes(); ++x) {
    double d;
    if (n == 2) {
      d = (1.0 + e.at(0, x)) * (1.0 + e.at(3, x)) - e.at(1, x) * e.at(2, x);
    } else {
      double a00 = 1.0 + e.at(0, x), a01 = e.at(1, x), a02 = e.at(2, x);
      double a10 = e.at(3, x), a11 = 1.0 + e.at(4, x), a12 = e.at(5, x);
      double a20 = e.at(6, x), a21 = e.at(7, x), a22 = 1.0 + e.at(8, x);
      d = a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
          a02 * (a10 * a21 - a11 * a20);
    }
    worst = std::max(worst, std::abs(d - 1.0));
  }
  return worst;
}

double div_transpose_residual(const SpectralField& strain) {
  double base = spectral_l2_norm(strain);
  if (base == 0.0) return 0.0;
  SpectralField div_t = divergence_tensor(transpose_tensor(strain));
  return spectral_l2_norm(div_t) / base;
}

double compatibility_residual(const SpectralField& strain, double dealias_fraction) {
  GridPtr gp = strain.grid_ptr();
  const Grid& g = *gp;
  const int n = g.dim();

  double grad_norm_sq = 0.0;
  std::vector<SpectralField> de;  // d_l E, spectral
  de.reserve(n);
  for (int l = 0; l < n; ++l) {
    de.push_back(spectral_derivative(strain, l));
    double nl = spectral_l2_norm(de.back());
    grad_norm_sq += nl * nl;
  }
  double base = std::sqrt(grad_norm_sq);
  if (base == 0.0) return 0.0;

  PhysicalField e = inverse_transform(strain);
  double res_sq = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = j + 1; m < n; ++m) {
        // left side d_m E_ij - d_j E_im
        SpectralField eq(gp, Rank::scalar);
        const int cij = tensor_component(i, j, n);
        const int cim = tensor_component(i, m, n);
        for (std::size_t idx = 0; idx < g.modes(); ++idx)
          eq.at(0, idx) = de[m].at(cij, idx) - de[j].at(cim, idx);
        // right side d_l (E_lj E_im - E_lm E_ij)
        for (int l = 0; l < n; ++l) {
          PhysicalField prod(gp, Rank::scalar);
          const int clj = tensor_component(l, j, n);
          const int clm = tensor_component(l, m, n);
          for (std::size_t x = 0; x < g.modes(); ++x)
            prod.at(0, x) = e.at(clj, x) * e.at(cim, x) - e.at(clm, x) * e.at(cij, x);
          SpectralField ps = forward_transform(prod);
          apply_dealias(ps, dealias_fraction);
          SpectralField dps = spectral_derivative(ps, l);
          axpy(-1.0, dps, eq);
        }
        double r = spectral_l2_norm(eq);
        res_sq += r * r;
      }
  return std::sqrt(res_sq) / base;
}

}  // namespace

ConstraintResiduals constraint_residuals(const FlowState& state,
                                         double dealias_fraction) {
  ConstraintResiduals out;
  out.r_det = det_residual(state.strain);
  out.r_divT = div_transpose_residual(state.strain);
  out.r_compat = compatibility_residual(state.strain, dealias_fraction);
  return out;
}

}  // namespace vefl
