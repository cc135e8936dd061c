#include "veflab/grid.hpp"

#include <stdexcept>

namespace vefl {

namespace {
bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }
}  // namespace

Grid::Grid(int dim, int points_per_dim, double period)
    : dim_(dim), m_(points_per_dim), period_(period) {
  if (dim_ != 2 && dim_ != 3) throw std::invalid_argument("grid: dim must be 2 or 3");
  if (!is_power_of_two(m_) || m_ < 8)
    throw std::invalid_argument("grid: points_per_dim must be a power of two >= 8");
  if (!(period_ > 0.0)) throw std::invalid_argument("grid: period must be > 0");
  modes_ = 1;
  volume_ = 1.0;
  cell_weight_ = 1.0;
  for (int d = 0; d < dim_; ++d) {
    modes_ *= m_;
    volume_ *= period_;
    cell_weight_ *= period_ / m_;
  }
}

GridPtr make_grid(int dim, int points_per_dim, double period) {
  return std::make_shared<Grid>(dim, points_per_dim, period);
}

}  // namespace vefl
