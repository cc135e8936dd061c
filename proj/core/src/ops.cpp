#include "veflab/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vefl {

SpectralField spectral_derivative(const SpectralField& f, int direction) {
  const Grid& g = f.grid();
  if (direction < 0 || direction >= g.dim())
    throw std::invalid_argument("spectral_derivative: direction out of range");
  SpectralField out(f.grid_ptr(), f.rank());
  const double k0 = g.base_wavenumber();
  const int m = g.points_per_dim();
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* src = f.component(c);
    std::complex<double>* dst = out.component(c);
    for (std::size_t idx = 0; idx < g.modes(); ++idx) {
      auto mi = g.unflatten(idx);
      int k = g.lattice(mi[direction]);
      if (k == -m / 2) {
        dst[idx] = 0.0;
      } else {
        double xi = k0 * k;
        dst[idx] = std::complex<double>(0.0, xi) * src[idx];
      }
    }
  }
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out(f.grid_ptr(), f.rank());
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* src = f.component(c);
    std::complex<double>* dst = out.component(c);
    for (std::size_t idx = 0; idx < g.modes(); ++idx)
      dst[idx] = -g.wavenumber_sq(idx) * src[idx];
  }
  return out;
}

SpectralField lambda_power(const SpectralField& f, double s) {
  const Grid& g = f.grid();
  SpectralField out(f.grid_ptr(), f.rank());
  if (s == 0.0) {
    out.data() = f.data();
    return out;
  }
  if (s < 0.0) {
    double max_abs = 0.0;
    for (const auto& z : f.data()) max_abs = std::max(max_abs, std::abs(z));
    for (int c = 0; c < f.components(); ++c)
      if (std::abs(f.at(c, 0)) > 1e-12 * std::max(max_abs, 1e-300))
        throw std::invalid_argument(
            "lambda_power: negative exponent requires a zero-mean field");
  }
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* src = f.component(c);
    std::complex<double>* dst = out.component(c);
    for (std::size_t idx = 0; idx < g.modes(); ++idx) {
      double r2 = g.wavenumber_sq(idx);
      dst[idx] = (r2 == 0.0) ? 0.0 : std::pow(r2, 0.5 * s) * src[idx];
    }
  }
  return out;
}

SpectralField leray_project(const SpectralField& u) {
  const Grid& g = u.grid();
  if (u.rank() != Rank::vector)
    throw std::invalid_argument("leray_project: vector field required");
  SpectralField out = u;
  const int dim = g.dim();
  for (std::size_t idx = 0; idx < g.modes(); ++idx) {
    auto xi = g.wavevector(idx);
    double r2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
    if (r2 == 0.0) continue;
    std::complex<double> dot = 0.0;
    for (int d = 0; d < dim; ++d) dot += xi[d] * out.at(d, idx);
    dot /= r2;
    for (int d = 0; d < dim; ++d) out.at(d, idx) -= xi[d] * dot;
  }
  return out;
}

SpectralField gradient(const SpectralField& f) {
  const Grid& g = f.grid();
  const int dim = g.dim();
  Rank out_rank;
  if (f.rank() == Rank::scalar)
    out_rank = Rank::vector;
  else if (f.rank() == Rank::vector)
    out_rank = Rank::tensor;
  else
    throw std::invalid_argument("gradient: scalar or vector field required");
  SpectralField out(f.grid_ptr(), out_rank);
  for (int i = 0; i < f.components(); ++i) {
    for (int j = 0; j < dim; ++j) {
      SpectralField d = spectral_derivative(f, j);
      int c_out = (f.rank() == Rank::scalar) ? j : tensor_component(i, j, dim);
      std::copy(d.component(i), d.component(i) + g.modes(), out.component(c_out));
    }
  }
  return out;
}

SpectralField divergence_tensor(const SpectralField& t) {
  const Grid& g = t.grid();
  if (t.rank() != Rank::tensor)
    throw std::invalid_argument("divergence_tensor: tensor field required");
  const int dim = g.dim();
  SpectralField out(t.grid_ptr(), Rank::vector);
  for (int j = 0; j < dim; ++j) {
    SpectralField d = spectral_derivative(t, j);
    for (int i = 0; i < dim; ++i) {
      const std::complex<double>* src = d.component(tensor_component(i, j, dim));
      std::complex<double>* dst = out.component(i);
      for (std::size_t idx = 0; idx < g.modes(); ++idx) dst[idx] += src[idx];
    }
  }
  return out;
}

SpectralField divergence_vector(const SpectralField& v) {
  const Grid& g = v.grid();
  if (v.rank() != Rank::vector)
    throw std::invalid_argument("divergence_vector: vector field required");
  SpectralField out(v.grid_ptr(), Rank::scalar);
  for (int d = 0; d < g.dim(); ++d) {
    SpectralField dd = spectral_derivative(v, d);
    const std::complex<double>* src = dd.component(d);
    std::complex<double>* dst = out.component(0);
    for (std::size_t idx = 0; idx < g.modes(); ++idx) dst[idx] += src[idx];
  }
  return out;
}

SpectralField transpose_tensor(const SpectralField& t) {
  const Grid& g = t.grid();
  if (t.rank() != Rank::tensor)
    throw std::invalid_argument("transpose_tensor: tensor field required");
  const int dim = g.dim();
  SpectralField out(t.grid_ptr(), Rank::tensor);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const std::complex<double>* src = t.component(tensor_component(i, j, dim));
      std::copy(src, src + g.modes(), out.component(tensor_component(j, i, dim)));
    }
  return out;
}

double grid_lp_norm(const PhysicalField& f, double p) {
  const Grid& g = f.grid();
  const std::size_t n = g.modes();
  const int nc = f.components();
  const bool is_inf = std::isinf(p);
  if (!is_inf && p < 1.0) throw std::invalid_argument("grid_lp_norm: p must be >= 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double mag2 = 0.0;
    for (int c = 0; c < nc; ++c) {
      double v = f.at(c, i);
      mag2 += v * v;
    }
    if (is_inf) {
      acc = std::max(acc, mag2);
    } else if (p == 2.0) {
      acc += mag2;
    } else {
      acc += std::pow(mag2, 0.5 * p);
    }
  }
  if (is_inf) return std::sqrt(acc);
  if (p == 2.0) return std::sqrt(acc * g.cell_weight());
  return std::pow(acc, 1.0 / p) * std::pow(g.cell_weight(), 1.0 / p);
}

double spectral_l2_norm(const SpectralField& f) {
  double acc = 0.0;
  for (const auto& z : f.data()) acc += std::norm(z);
  return std::sqrt(acc * f.grid().volume());
}

double conj_symmetry_error(const SpectralField& f) {
  const Grid& g = f.grid();
  double err = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* a = f.component(c);
    for (std::size_t idx = 0; idx < g.modes(); ++idx) {
      std::size_t cj = g.conjugate_index(idx);
      err = std::max(err, std::abs(a[idx] - std::conj(a[cj])));
    }
  }
  return err;
}

double divergence_rel_l2(const SpectralField& v) {
  const Grid& g = v.grid();
  if (v.rank() != Rank::vector)
    throw std::invalid_argument("divergence_rel_l2: vector field required");
  double num = 0.0, den = 0.0;
  for (std::size_t idx = 0; idx < g.modes(); ++idx) {
    auto xi = g.wavevector(idx);
    std::complex<double> dot = 0.0;
    for (int d = 0; d < g.dim(); ++d) {
      dot += xi[d] * v.at(d, idx);
      den += std::norm(v.at(d, idx));
    }
    num += std::norm(dot);
  }
  if (den == 0.0) return 0.0;
  return std::sqrt(num / den);
}

void apply_dealias(SpectralField& f, double fraction) {
  const Grid& g = f.grid();
  if (!(fraction > 0.5 && fraction <= 1.0))
    throw std::invalid_argument("apply_dealias: fraction must be in (1/2, 1]");
  const int keep = static_cast<int>(std::floor(g.points_per_dim() * fraction / 2.0));
  for (std::size_t idx = 0; idx < g.modes(); ++idx) {
    auto mi = g.unflatten(idx);
    bool cut = false;
    for (int d = 0; d < g.dim(); ++d)
      if (std::abs(g.lattice(mi[d])) > keep) cut = true;
    if (cut)
      for (int c = 0; c < f.components(); ++c) f.at(c, idx) = 0.0;
  }
}

void remove_mean(SpectralField& f) {
  for (int c = 0; c < f.components(); ++c) f.at(c, 0) = 0.0;
}

}  // namespace vefl
