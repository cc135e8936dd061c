#pragma once

#include <utility>
#include <vector>

#include "veflab/field.hpp"

namespace vefl {

// Smooth radial profiles of the dyadic family.
// chi = 1 on |xi| <= 3/4, 0 on |xi| >= 4/3; phi(xi) = chi(xi/2) - chi(xi),
// supported on 3/4 <= |xi| <= 8/3 and equal to 1 on [4/3, 3/2].
double bump_chi(double r);
double bump_phi(double r);

// Dyadic blocks q in [q_min, q_max] on a fixed grid, each realized as
// the modewise multiplier phi(2^{-q} xi). The partition of unity
// sum_q phi(2^{-q} xi) = 1 holds exactly for lattice modes with
// (4/3) 2^{q_min} <= |xi| <= (3/4) 2^{q_max+1}.
class DyadicPartition {
public:
  DyadicPartition(GridPtr grid, int q_min, int q_max);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  int q_min() const { return q_min_; }
  int q_max() const { return q_max_; }
  int blocks() const { return q_max_ - q_min_ + 1; }

  const std::vector<double>& block_weight(int q) const;
  // 1 - sum_q phi(2^{-q} xi) per mode
  const std::vector<double>& residual() const { return residual_; }

private:
  GridPtr grid_;
  int q_min_, q_max_;
  std::vector<std::vector<double>> weights_;
  std::vector<double> residual_;
};

// Validates spectral room: (8/3) 2^{q_max} must not exceed the grid's
// Nyquist radius. Throws with the admissible range spelled out.
DyadicPartition build_partition(GridPtr grid, int q_min, int q_max);

// Full admissible range: q_min = floor(log2(3 k0 / 4)) down to the
// first nonzero lattice radius, q_max = floor(log2(3 Nyq / 8)).
DyadicPartition build_partition(GridPtr grid);

int admissible_q_min(const Grid& grid);
int admissible_q_max(const Grid& grid);

// Delta_q f
SpectralField dyadic_block(const DyadicPartition& part, const SpectralField& f, int q);

// S_q f = sum_{p <= q-1} Delta_p f plus the zero mode; realized by the
// closed-form multiplier chi(2^{-q} xi)
SpectralField low_cut(const SpectralField& f, int q);

// the largest j with 2^j <= r0
int hybrid_cut_index(double r0);

// f_low = chi(2^{-(j0+1)} xi) f (zero mode included), f_high = f - f_low;
// f_low spectrum within |xi| <= (8/3) 2^{j0} <= (8/3) r0
std::pair<SpectralField, SpectralField> hybrid_split(const SpectralField& f, double r0);

}  // namespace vefl
