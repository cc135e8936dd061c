#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>

namespace vefl {

inline constexpr double kPi = 3.14159265358979323846;

// Uniform periodic grid on [0,L)^dim, M points per direction.
// Lattice wavenumbers k in [-M/2, M/2) per direction, physical
// wavenumber xi = 2*pi*k/L. Mode storage is row-major over the
// per-direction mode indices m in [0,M), with m <-> k via the usual
// FFT wrapping (k = m for m < M/2, k = m - M otherwise).
class Grid {
public:
  Grid(int dim, int points_per_dim, double period);

  int dim() const { return dim_; }
  int points_per_dim() const { return m_; }
  double period() const { return period_; }

  std::size_t modes() const { return modes_; }
  double spacing() const { return period_ / m_; }
  double volume() const { return volume_; }
  double cell_weight() const { return cell_weight_; }  // (L/M)^dim
  double base_wavenumber() const { return 2.0 * kPi / period_; }
  int nyquist_lattice() const { return m_ / 2; }
  double nyquist_radius() const { return base_wavenumber() * (m_ / 2); }

  // lattice wavenumber of a per-direction mode index
  int lattice(int mode_index) const {
    return mode_index < m_ / 2 ? mode_index : mode_index - m_;
  }

  std::array<int, 3> unflatten(std::size_t flat) const {
    std::array<int, 3> mi{0, 0, 0};
    if (dim_ == 2) {
      mi[1] = static_cast<int>(flat % m_);
      mi[0] = static_cast<int>(flat / m_);
    } else {
      mi[2] = static_cast<int>(flat % m_);
      flat /= m_;
      mi[1] = static_cast<int>(flat % m_);
      mi[0] = static_cast<int>(flat / m_);
    }
    return mi;
  }

  std::size_t flatten(const std::array<int, 3>& mi) const {
    std::size_t flat = static_cast<std::size_t>(mi[0]) * m_ + mi[1];
    if (dim_ == 3) flat = flat * m_ + mi[2];
    return flat;
  }

  // physical wavevector components of a flat mode index (unused entries 0)
  std::array<double, 3> wavevector(std::size_t flat) const {
    auto mi = unflatten(flat);
    std::array<double, 3> xi{0.0, 0.0, 0.0};
    double k0 = base_wavenumber();
    for (int d = 0; d < dim_; ++d) xi[d] = k0 * lattice(mi[d]);
    return xi;
  }

  double wavenumber_sq(std::size_t flat) const {
    auto xi = wavevector(flat);
    return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
  }

  double wavenumber(std::size_t flat) const { return std::sqrt(wavenumber_sq(flat)); }

  // squared lattice radius (integer |k|^2)
  long long lattice_sq(std::size_t flat) const {
    auto mi = unflatten(flat);
    long long r2 = 0;
    for (int d = 0; d < dim_; ++d) {
      long long k = lattice(mi[d]);
      r2 += k * k;
    }
    return r2;
  }

  // mode index of the conjugate partner -k
  std::size_t conjugate_index(std::size_t flat) const {
    auto mi = unflatten(flat);
    std::array<int, 3> mj{0, 0, 0};
    for (int d = 0; d < dim_; ++d) mj[d] = mi[d] == 0 ? 0 : m_ - mi[d];
    return flatten(mj);
  }

  double coordinate(int mode_index) const { return spacing() * mode_index; }

  bool operator==(const Grid& o) const {
    return dim_ == o.dim_ && m_ == o.m_ && period_ == o.period_;
  }

private:
  int dim_;
  int m_;
  double period_;
  std::size_t modes_;
  double volume_;
  double cell_weight_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int dim, int points_per_dim, double period);

}  // namespace vefl
