#include "veflab/field.hpp"

#include <stdexcept>

namespace vefl {

int component_count(Rank rank, int dim) {
  switch (rank) {
    case Rank::scalar:
      return 1;
    case Rank::vector:
      return dim;
    case Rank::tensor:
      return dim * dim;
  }
  throw std::invalid_argument("field: unknown rank");
}

SpectralField::SpectralField(GridPtr grid, Rank rank)
    : grid_(std::move(grid)),
      rank_(rank),
      components_(component_count(rank, grid_->dim())),
      coef_(components_ * grid_->modes()) {}

PhysicalField::PhysicalField(GridPtr grid, Rank rank)
    : grid_(std::move(grid)),
      rank_(rank),
      components_(component_count(rank, grid_->dim())),
      val_(components_ * grid_->modes()) {}

bool same_shape(const SpectralField& a, const SpectralField& b) {
  return a.rank() == b.rank() && a.grid() == b.grid();
}

void axpy(std::complex<double> alpha, const SpectralField& x, SpectralField& y) {
  if (!same_shape(x, y)) throw std::invalid_argument("axpy: shape mismatch");
  const auto& xd = x.data();
  auto& yd = y.data();
  for (std::size_t i = 0; i < xd.size(); ++i) yd[i] += alpha * xd[i];
}

void scale(SpectralField& f, double alpha) {
  for (auto& z : f.data()) z *= alpha;
}

}  // namespace vefl
