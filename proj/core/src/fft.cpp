#include "veflab/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <stdexcept>
#include <tuple>

namespace vefl {

namespace {

// One cached in-place c2c plan per (dim, M, sign), with its own buffer.
// FFTW_ESTIMATE keeps planning deterministic and leaves input intact.
class PlanCache {
public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void execute(const Grid& g, int sign, std::complex<double>* data) {
    auto key = std::make_tuple(g.dim(), g.points_per_dim(), sign);
    auto it = plans_.find(key);
    if (it == plans_.end()) {
      Entry e;
      e.buf = fftw_alloc_complex(g.modes());
      if (!e.buf) throw std::bad_alloc();
      int m = g.points_per_dim();
      if (g.dim() == 2)
        e.plan = fftw_plan_dft_2d(m, m, e.buf, e.buf, sign, FFTW_ESTIMATE);
      else
        e.plan = fftw_plan_dft_3d(m, m, m, e.buf, e.buf, sign, FFTW_ESTIMATE);
      if (!e.plan) throw std::runtime_error("fft: plan creation failed");
      it = plans_.emplace(key, e).first;
    }
    auto& e = it->second;
    std::memcpy(e.buf, data, g.modes() * sizeof(fftw_complex));
    fftw_execute(e.plan);
    std::memcpy(data, e.buf, g.modes() * sizeof(fftw_complex));
  }

private:
  struct Entry {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
  };
  std::map<std::tuple<int, int, int>, Entry> plans_;

  PlanCache() = default;
  ~PlanCache() {
    for (auto& [k, e] : plans_) {
      if (e.plan) fftw_destroy_plan(e.plan);
      if (e.buf) fftw_free(e.buf);
    }
  }
};

}  // namespace

SpectralField forward_transform(const PhysicalField& f) {
  SpectralField out(f.grid_ptr(), f.rank());
  const std::size_t n = f.grid().modes();
  const double norm = 1.0 / static_cast<double>(n);
  for (int c = 0; c < f.components(); ++c) {
    std::complex<double>* dst = out.component(c);
    const double* src = f.component(c);
    for (std::size_t i = 0; i < n; ++i) dst[i] = src[i];
    PlanCache::instance().execute(f.grid(), FFTW_FORWARD, dst);
    for (std::size_t i = 0; i < n; ++i) dst[i] *= norm;
  }
  return out;
}

PhysicalField inverse_transform(const SpectralField& f, double rel_imag_tol) {
  PhysicalField out(f.grid_ptr(), f.rank());
  const std::size_t n = f.grid().modes();
  std::vector<std::complex<double>> buf(n);
  double max_imag = 0.0;
  double max_abs = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* src = f.component(c);
    std::copy(src, src + n, buf.begin());
    PlanCache::instance().execute(f.grid(), FFTW_BACKWARD, buf.data());
    double* dst = out.component(c);
    for (std::size_t i = 0; i < n; ++i) {
      dst[i] = buf[i].real();
      max_imag = std::max(max_imag, std::abs(buf[i].imag()));
      max_abs = std::max(max_abs, std::abs(buf[i]));
    }
  }
  if (max_imag > rel_imag_tol * std::max(max_abs, 1e-300))
    throw std::runtime_error(
        "inverse_transform: imaginary residue exceeds tolerance; "
        "coefficients are not conjugate-symmetric");
  return out;
}

}  // namespace vefl
