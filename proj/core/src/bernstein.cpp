#include "veflab/bernstein.hpp"

#include <cmath>
#include <stdexcept>

#include "veflab/fft.hpp"
#include "veflab/ops.hpp"

namespace vefl {

BernsteinRatios bernstein_ratio(const SpectralField& f, int q, int k, double a,
                                double b) {
  if (k != 0 && k != 1) throw std::invalid_argument("bernstein_ratio: k must be 0 or 1");
  if (!(a >= 1.0) || !(b >= a))
    throw std::invalid_argument("bernstein_ratio: need 1 <= a <= b");
  if (f.rank() != Rank::scalar)
    throw std::invalid_argument("bernstein_ratio: scalar field required");

  const Grid& g = f.grid();
  const double lo = 0.75 * std::exp2(q), hi = 8.0 / 3.0 * std::exp2(q);
  double inside = 0.0, outside = 0.0;
  for (std::size_t idx = 0; idx < g.modes(); ++idx) {
    double e = std::norm(f.at(0, idx));
    double r = g.wavenumber(idx);
    (r >= lo && r <= hi ? inside : outside) += e;
  }
  if (outside > 1e-12 * (inside + outside) || inside == 0.0)
    throw std::invalid_argument(
        "bernstein_ratio: field is not supported in the q-annulus");

  PhysicalField base = inverse_transform(f);
  double fa = grid_lp_norm(base, a);

  double da, db;
  if (k == 0) {
    da = fa;
    db = grid_lp_norm(base, b);
  } else {
    PhysicalField grad = inverse_transform(gradient(f));
    da = grid_lp_norm(grad, a);
    db = grid_lp_norm(grad, b);
  }

  const double n = g.dim();
  const double inv_a = 1.0 / a;
  const double inv_b = std::isinf(b) ? 0.0 : 1.0 / b;
  BernsteinRatios out;
  out.lower = da / (std::exp2(static_cast<double>(q) * k) * fa);
  out.upper = db / (std::exp2(q * (k + n * (inv_a - inv_b))) * fa);
  return out;
}

}  // namespace vefl
