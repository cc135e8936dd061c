#include "veflab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "veflab/fft.hpp"
#include "veflab/ops.hpp"

namespace vefl {

std::vector<double> block_lp_norms(const SpectralField& f, double p,
                                   const DyadicPartition& part) {
  std::vector<double> out(part.blocks());
  for (int q = part.q_min(); q <= part.q_max(); ++q) {
    SpectralField blk = dyadic_block(part, f, q);
    out[q - part.q_min()] = grid_lp_norm(inverse_transform(blk), p);
  }
  return out;
}

double besov_accumulate(const std::vector<double>& n, double s, double r, int q_min,
                        int q_lo, int q_hi) {
  if (!(r >= 1.0)) throw std::invalid_argument("besov: r must be >= 1");
  const bool r_inf = std::isinf(r);
  double acc = 0.0;
  for (int q = std::max(q_lo, q_min); q <= std::min(q_hi, q_min + (int)n.size() - 1);
       ++q) {
    double term = std::exp2(s * q) * n[q - q_min];
    if (r_inf)
      acc = std::max(acc, term);
    else
      acc += std::pow(term, r);
  }
  if (r_inf) return acc;
  return r == 1.0 ? acc : std::pow(acc, 1.0 / r);
}

BesovResult besov_norm(const SpectralField& f, const BesovSpec& spec,
                       const DyadicPartition& part) {
  if (!(spec.p >= 1.0)) throw std::invalid_argument("besov: p must be >= 1");
  auto norms = block_lp_norms(f, spec.p, part);
  BesovResult res;
  res.value =
      besov_accumulate(norms, spec.s, spec.r, part.q_min(), part.q_min(), part.q_max());

  const auto& resid = part.residual();
  double total = 0.0, leaked = 0.0;
  const std::size_t n = f.grid().modes();
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* a = f.component(c);
    for (std::size_t idx = 0; idx < n; ++idx) {
      double e = std::norm(a[idx]);
      total += e;
      leaked += e * resid[idx] * resid[idx];
    }
  }
  res.leaked_fraction = total == 0.0 ? 0.0 : leaked / total;
  return res;
}

}  // namespace vefl
