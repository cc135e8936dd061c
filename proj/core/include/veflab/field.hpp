#pragma once

#include <complex>
#include <vector>

#include "veflab/grid.hpp"

namespace vefl {

enum class Rank { scalar, vector, tensor };

int component_count(Rank rank, int dim);

inline int tensor_component(int i, int j, int dim) { return i * dim + j; }

// Fourier coefficients of a real field, component-major, modes
// row-major. Normalization: f(x) = sum_k coef(k) exp(i xi_k . x),
// i.e. coef = (1/M^dim) * DFT(samples).
class SpectralField {
public:
  SpectralField(GridPtr grid, Rank rank);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  Rank rank() const { return rank_; }
  int components() const { return components_; }

  std::complex<double>* component(int c) { return coef_.data() + c * grid_->modes(); }
  const std::complex<double>* component(int c) const {
    return coef_.data() + c * grid_->modes();
  }

  std::complex<double>& at(int c, std::size_t mode) {
    return coef_[c * grid_->modes() + mode];
  }
  const std::complex<double>& at(int c, std::size_t mode) const {
    return coef_[c * grid_->modes() + mode];
  }

  std::vector<std::complex<double>>& data() { return coef_; }
  const std::vector<std::complex<double>>& data() const { return coef_; }

private:
  GridPtr grid_;
  Rank rank_;
  int components_;
  std::vector<std::complex<double>> coef_;
};

// Physical-space samples of a real field, same layout conventions.
class PhysicalField {
public:
  PhysicalField(GridPtr grid, Rank rank);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  Rank rank() const { return rank_; }
  int components() const { return components_; }

  double* component(int c) { return val_.data() + c * grid_->modes(); }
  const double* component(int c) const { return val_.data() + c * grid_->modes(); }

  double& at(int c, std::size_t idx) { return val_[c * grid_->modes() + idx]; }
  const double& at(int c, std::size_t idx) const { return val_[c * grid_->modes() + idx]; }

  std::vector<double>& data() { return val_; }
  const std::vector<double>& data() const { return val_; }

private:
  GridPtr grid_;
  Rank rank_;
  int components_;
  std::vector<double> val_;
};

// in-place y += alpha * x
void axpy(std::complex<double> alpha, const SpectralField& x, SpectralField& y);
void scale(SpectralField& f, double alpha);
bool same_shape(const SpectralField& a, const SpectralField& b);

}  // namespace vefl
