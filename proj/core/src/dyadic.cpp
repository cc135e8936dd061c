#include "veflab/dyadic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vefl {

namespace {
double bump_b(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double bump_psi(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double a = bump_b(x);
  return a / (a + bump_b(1.0 - x));
}
}  // namespace

double bump_chi(double r) { return bump_psi((4.0 / 3.0 - r) / (4.0 / 3.0 - 3.0 / 4.0)); }

double bump_phi(double r) { return bump_chi(r / 2.0) - bump_chi(r); }

DyadicPartition::DyadicPartition(GridPtr grid, int q_min, int q_max)
    : grid_(std::move(grid)), q_min_(q_min), q_max_(q_max) {
  const std::size_t n = grid_->modes();
  weights_.assign(blocks(), std::vector<double>(n));
  residual_.assign(n, 1.0);
  for (int q = q_min_; q <= q_max_; ++q) {
    double inv = std::exp2(-static_cast<double>(q));
    auto& w = weights_[q - q_min_];
    for (std::size_t idx = 0; idx < n; ++idx) {
      double v = bump_phi(inv * grid_->wavenumber(idx));
      w[idx] = v;
      residual_[idx] -= v;
    }
  }
}

const std::vector<double>& DyadicPartition::block_weight(int q) const {
  if (q < q_min_ || q > q_max_)
    throw std::invalid_argument("dyadic: block index out of partition range");
  return weights_[q - q_min_];
}

int admissible_q_min(const Grid& grid) {
  return static_cast<int>(std::floor(std::log2(0.75 * grid.base_wavenumber())));
}

int admissible_q_max(const Grid& grid) {
  return static_cast<int>(std::floor(std::log2(3.0 * grid.nyquist_radius() / 8.0)));
}

DyadicPartition build_partition(GridPtr grid, int q_min, int q_max) {
  if (q_min >= q_max) throw std::invalid_argument("build_partition: q_min must be < q_max");
  int hi = admissible_q_max(*grid);
  if (q_max > hi) {
    std::ostringstream os;
    os << "build_partition: insufficient spectral room, (8/3)*2^q_max exceeds the "
          "Nyquist radius; admissible q range is ["
       << admissible_q_min(*grid) << ", " << hi << "]";
    throw std::invalid_argument(os.str());
  }
  return DyadicPartition(std::move(grid), q_min, q_max);
}

DyadicPartition build_partition(GridPtr grid) {
  int lo = admissible_q_min(*grid);
  int hi = admissible_q_max(*grid);
  return build_partition(std::move(grid), lo, hi);
}

SpectralField dyadic_block(const DyadicPartition& part, const SpectralField& f, int q) {
  if (!(f.grid() == part.grid()))
    throw std::invalid_argument("dyadic_block: field grid does not match partition");
  const auto& w = part.block_weight(q);
  SpectralField out(f.grid_ptr(), f.rank());
  const std::size_t n = f.grid().modes();
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* src = f.component(c);
    std::complex<double>* dst = out.component(c);
    for (std::size_t idx = 0; idx < n; ++idx) dst[idx] = w[idx] * src[idx];
  }
  return out;
}

SpectralField low_cut(const SpectralField& f, int q) {
  const Grid& g = f.grid();
  SpectralField out(f.grid_ptr(), f.rank());
  const std::size_t n = g.modes();
  double inv = std::exp2(-static_cast<double>(q));
  std::vector<double> w(n);
  for (std::size_t idx = 0; idx < n; ++idx) w[idx] = bump_chi(inv * g.wavenumber(idx));
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* src = f.component(c);
    std::complex<double>* dst = out.component(c);
    for (std::size_t idx = 0; idx < n; ++idx) dst[idx] = w[idx] * src[idx];
  }
  return out;
}

int hybrid_cut_index(double r0) {
  if (!(r0 > 0.0)) throw std::invalid_argument("hybrid_cut_index: r0 must be > 0");
  int j0 = static_cast<int>(std::floor(std::log2(r0)));
  while (std::exp2(j0 + 1) <= r0) ++j0;
  while (std::exp2(j0) > r0) --j0;
  return j0;
}

std::pair<SpectralField, SpectralField> hybrid_split(const SpectralField& f, double r0) {
  int j0 = hybrid_cut_index(r0);
  SpectralField low = low_cut(f, j0 + 1);
  SpectralField high = f;
  axpy(-1.0, low, high);
  return {std::move(low), std::move(high)};
}

}  // namespace vefl
