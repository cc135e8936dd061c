#include "veflab/paraproduct.hpp"

#include <cmath>
#include <stdexcept>

#include "veflab/fft.hpp"

namespace vefl {

namespace {

// per-direction spectral bandwidth max |k_d| over nonzero coefficients
std::array<int, 3> bandwidth(const SpectralField& f) {
  const Grid& g = f.grid();
  std::array<int, 3> bw{0, 0, 0};
  for (std::size_t idx = 0; idx < g.modes(); ++idx) {
    bool zero = true;
    for (int c = 0; c < f.components() && zero; ++c)
      if (f.at(c, idx) != std::complex<double>(0.0, 0.0)) zero = false;
    if (zero) continue;
    auto mi = g.unflatten(idx);
    for (int d = 0; d < g.dim(); ++d)
      bw[d] = std::max(bw[d], std::abs(g.lattice(mi[d])));
  }
  return bw;
}

void accumulate_product(PhysicalField& acc, const PhysicalField& a,
                        const PhysicalField& b) {
  for (std::size_t i = 0; i < acc.data().size(); ++i)
    acc.data()[i] += a.data()[i] * b.data()[i];
}

}  // namespace

SpectralField pointwise_product(const SpectralField& u, const SpectralField& v) {
  PhysicalField pu = inverse_transform(u);
  PhysicalField pv = inverse_transform(v);
  PhysicalField prod(u.grid_ptr(), Rank::scalar);
  for (std::size_t i = 0; i < prod.data().size(); ++i)
    prod.data()[i] = pu.data()[i] * pv.data()[i];
  return forward_transform(prod);
}

Paraproduct paraproduct(const DyadicPartition& part, const SpectralField& u,
                        const SpectralField& v) {
  if (u.rank() != Rank::scalar || v.rank() != Rank::scalar)
    throw std::invalid_argument("paraproduct: scalar factors required");
  if (!(u.grid() == part.grid()) || !(v.grid() == part.grid()))
    throw std::invalid_argument("paraproduct: factor grids must match the partition");

  const Grid& g = u.grid();
  auto bu = bandwidth(u);
  auto bv = bandwidth(v);
  for (int d = 0; d < g.dim(); ++d)
    if (bu[d] + bv[d] > g.points_per_dim() / 2 - 1)
      throw std::invalid_argument(
          "paraproduct: factor bandwidths would alias the product on this grid");

  const int q_lo = part.q_min(), q_hi = part.q_max();
  const int nb = part.blocks();
  std::vector<PhysicalField> du, dv;
  du.reserve(nb);
  dv.reserve(nb);
  for (int q = q_lo; q <= q_hi; ++q) {
    du.push_back(inverse_transform(dyadic_block(part, u, q)));
    dv.push_back(inverse_transform(dyadic_block(part, v, q)));
  }

  GridPtr gp = u.grid_ptr();
  PhysicalField acc_uv(gp, Rank::scalar), acc_vu(gp, Rank::scalar),
      acc_r(gp, Rank::scalar);
  for (int q = q_lo; q <= q_hi; ++q) {
    PhysicalField su = inverse_transform(low_cut(u, q - 1));
    PhysicalField sv = inverse_transform(low_cut(v, q - 1));
    accumulate_product(acc_uv, su, dv[q - q_lo]);
    accumulate_product(acc_vu, sv, du[q - q_lo]);
    for (int p = q - 1; p <= q + 1; ++p)
      if (p >= q_lo && p <= q_hi) accumulate_product(acc_r, du[p - q_lo], dv[q - q_lo]);
  }

  Paraproduct out{forward_transform(acc_uv), forward_transform(acc_vu),
                  forward_transform(acc_r)};
  return out;
}

}  // namespace vefl
