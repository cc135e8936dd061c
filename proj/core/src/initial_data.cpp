#include "veflab/initial_data.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "veflab/fft.hpp"
#include "veflab/ops.hpp"
#include "veflab/rng.hpp"

namespace vefl {

namespace {

// keep only modes with lattice radius in [lo, hi]; Nyquist rows are
// stripped so the result stays exactly conjugate-symmetric
void band_limit(SpectralField& f, double lo, double hi) {
  const Grid& g = f.grid();
  const double lo2 = lo * lo, hi2 = hi * hi;
  for (std::size_t idx = 0; idx < g.modes(); ++idx) {
    auto mi = g.unflatten(idx);
    bool keep = true;
    long long r2 = 0;
    for (int d = 0; d < g.dim(); ++d) {
      long long k = g.lattice(mi[d]);
      if (k == -g.points_per_dim() / 2) keep = false;
      r2 += k * k;
    }
    double dr2 = static_cast<double>(r2);
    if (dr2 < lo2 || dr2 > hi2) keep = false;
    if (!keep)
      for (int c = 0; c < f.components(); ++c) f.at(c, idx) = 0.0;
  }
}

}  // namespace

SpectralField seeded_solenoidal_velocity(GridPtr grid, std::uint64_t seed,
                                         double amplitude, double band_lo,
                                         double band_hi) {
  SplitMix64 rng(seed);
  PhysicalField noise(grid, Rank::vector);
  for (int c = 0; c < noise.components(); ++c)
    for (std::size_t i = 0; i < grid->modes(); ++i) noise.at(c, i) = rng.normal();
  SpectralField v = forward_transform(noise);
  band_limit(v, band_lo, band_hi);
  remove_mean(v);
  v = leray_project(v);
  double sup = grid_lp_norm(inverse_transform(v), std::numeric_limits<double>::infinity());
  if (sup == 0.0 || amplitude == 0.0) {
    for (int c = 0; c < v.components(); ++c)
      for (std::size_t i = 0; i < grid->modes(); ++i) v.at(c, i) = 0.0;
    return v;
  }
  scale(v, amplitude / sup);
  return v;
}

namespace {

// tendency of the strain transport along the frozen velocity:
// -u . grad E + (grad u) E + grad u
SpectralField transport_tendency(const SpectralField& strain,
                                 const PhysicalField& u_phys,
                                 const PhysicalField& grad_u_phys,
                                 const SpectralField& grad_u_spec,
                                 double dealias_fraction) {
  const Grid& g = strain.grid();
  const int n = g.dim();
  PhysicalField e_phys = inverse_transform(strain);

  std::vector<PhysicalField> de;  // de[l] holds d_l E as a tensor field
  de.reserve(n);
  for (int l = 0; l < n; ++l)
    de.push_back(inverse_transform(spectral_derivative(strain, l)));

  PhysicalField acc(strain.grid_ptr(), Rank::tensor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int c = tensor_component(i, j, n);
      for (std::size_t x = 0; x < g.modes(); ++x) {
        double val = 0.0;
        for (int l = 0; l < n; ++l) {
          val -= u_phys.at(l, x) * de[l].at(c, x);
          val += grad_u_phys.at(tensor_component(i, l, n), x) *
                 e_phys.at(tensor_component(l, j, n), x);
        }
        acc.at(c, x) = val;
      }
    }
  SpectralField out = forward_transform(acc);
  apply_dealias(out, dealias_fraction);
  for (int c = 0; c < out.components(); ++c)
    for (std::size_t idx = 0; idx < g.modes(); ++idx)
      out.at(c, idx) += grad_u_spec.at(c, idx);
  return out;
}

double min_det_i_plus_e(const SpectralField& strain) {
  const Grid& g = strain.grid();
  const int n = g.dim();
  PhysicalField e = inverse_transform(strain);
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < g.modes(); ++x) {
    double d;
    if (n == 2) {
      d = (1.0 + e.at(0, x)) * (1.0 + e.at(3, x)) - e.at(1, x) * e.at(2, x);
    } else {
      double a00 = 1.0 + e.at(0, x), a01 = e.at(1, x), a02 = e.at(2, x);
      double a10 = e.at(3, x), a11 = 1.0 + e.at(4, x), a12 = e.at(5, x);
      double a20 = e.at(6, x), a21 = e.at(7, x), a22 = 1.0 + e.at(8, x);
      d = a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
          a02 * (a10 * a21 - a11 * a20);
    }
    if (d < lo) lo = d;
  }
  return lo;
}

}  // namespace

FlowState flowmap_initial_data(GridPtr grid, std::uint64_t seed, double amplitude,
                               double pseudo_time, double pseudo_dt,
                               double dealias_fraction, int band_lo, int band_hi) {
  if (pseudo_time < 0.0 || pseudo_dt <= 0.0)
    throw std::invalid_argument("flowmap_initial_data: bad pseudo-time parameters");
  SplitMix64 root(seed);
  std::uint64_t seed_u = root.next();
  std::uint64_t seed_v = root.next();

  FlowState state(grid, 0.0);
  state.velocity =
      seeded_solenoidal_velocity(grid, seed_v, amplitude, band_lo, band_hi);
  if (amplitude == 0.0 || pseudo_time == 0.0) return state;

  SpectralField u =
      seeded_solenoidal_velocity(grid, seed_u, amplitude, band_lo, band_hi);
  PhysicalField u_phys = inverse_transform(u);
  SpectralField grad_u = gradient(u);
  PhysicalField grad_u_phys = inverse_transform(grad_u);

  SpectralField e(grid, Rank::tensor);
  long long steps = static_cast<long long>(std::ceil(pseudo_time / pseudo_dt - 1e-9));
  auto rhs = [&](const SpectralField& s) {
    return transport_tendency(s, u_phys, grad_u_phys, grad_u, dealias_fraction);
  };
  double tau = 0.0;
  for (long long n = 0; n < steps; ++n) {
    double h = std::min(pseudo_dt, pseudo_time - tau);
    SpectralField k1 = rhs(e);
    SpectralField y2 = e;
    axpy(0.5 * h, k1, y2);
    SpectralField k2 = rhs(y2);
    SpectralField y3 = e;
    axpy(0.5 * h, k2, y3);
    SpectralField k3 = rhs(y3);
    SpectralField y4 = e;
    axpy(h, k3, y4);
    SpectralField k4 = rhs(y4);
    axpy(h / 6.0, k1, e);
    axpy(h / 3.0, k2, e);
    axpy(h / 3.0, k3, e);
    axpy(h / 6.0, k4, e);
    tau += h;
  }
  if (min_det_i_plus_e(e) <= 0.0)
    throw std::invalid_argument(
        "flowmap_initial_data: deformation too large, det(I + E0) reaches zero");
  state.strain = e;
  return state;
}

SpectralField oscillatory_velocity(GridPtr grid, double epsilon, double p,
                                   int envelope_power, double* projection_defect) {
  const int n = grid->dim();
  if (epsilon <= 0.0) throw std::invalid_argument("oscillatory_velocity: epsilon must be > 0");
  if (p < n)
    throw std::invalid_argument("oscillatory_velocity: p must be >= the dimension");
  if (envelope_power < 1)
    throw std::invalid_argument("oscillatory_velocity: envelope_power must be >= 1");
  double k_exact = grid->period() / (2.0 * kPi * epsilon);
  double k_round = std::round(k_exact);
  if (std::abs(k_exact - k_round) > 1e-9 * std::max(1.0, k_exact) || k_round < 1.0)
    throw std::invalid_argument(
        "oscillatory_velocity: 1/epsilon is not a lattice wavenumber of this grid");
  if (k_round >= grid->points_per_dim() / 2)
    throw std::invalid_argument(
        "oscillatory_velocity: 1/epsilon is at or beyond the grid Nyquist frequency");

  const double amp = std::pow(epsilon, static_cast<double>(n) / p - 1.0);
  PhysicalField raw(grid, Rank::vector);
  for (std::size_t x = 0; x < grid->modes(); ++x) {
    auto mi = grid->unflatten(x);
    double env = 1.0;
    for (int d = 0; d < n; ++d) {
      double c = 0.5 * (1.0 + std::cos(2.0 * kPi * grid->coordinate(mi[d]) / grid->period()));
      for (int e = 0; e < envelope_power; ++e) env *= c;
    }
    double val = amp * std::sin(grid->coordinate(mi[0]) / epsilon) * env;
    for (int c = 0; c < n; ++c) raw.at(c, x) = val;
  }
  SpectralField v_raw = forward_transform(raw);
  remove_mean(v_raw);
  SpectralField v = leray_project(v_raw);
  if (projection_defect != nullptr) {
    SpectralField diff = v;
    axpy(-1.0, v_raw, diff);
    double base = spectral_l2_norm(v_raw);
    *projection_defect = base > 0.0 ? spectral_l2_norm(diff) / base : 0.0;
  }
  return v;
}

}  // namespace vefl
