#include "veflab/decay.hpp"

#include <cmath>
#include <stdexcept>

namespace vefl {

DecayFit decay_fit(const std::vector<double>& times, const std::vector<double>& values,
                   std::size_t lo, std::size_t hi) {
  if (times.size() != values.size())
    throw std::invalid_argument("decay_fit: times/values length mismatch");
  if (hi > times.size() || lo >= hi)
    throw std::invalid_argument("decay_fit: bad window");
  const std::size_t n = hi - lo;
  if (n < 2) throw std::invalid_argument("decay_fit: window needs at least 2 samples");

  std::vector<double> logs(n);
  for (std::size_t k = 0; k < n; ++k) {
    double v = values[lo + k];
    if (!(v > 0.0))
      throw std::invalid_argument("decay_fit: non-positive value in window");
    logs[k] = std::log(v);
  }

  double st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double t = times[lo + k];
    st += t;
    sl += logs[k];
    stt += t * t;
    stl += t * logs[k];
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * stt - st * st;
  if (denom == 0.0) throw std::invalid_argument("decay_fit: degenerate time window");
  const double slope = (dn * stl - st * sl) / denom;
  const double intercept = (sl - slope * st) / dn;

  double ss = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = logs[k] - (intercept + slope * times[lo + k]);
    ss += d * d;
  }
  const double rms = std::sqrt(ss / dn);
  const double drop = std::abs(slope) * (times[hi - 1] - times[lo]);

  DecayFit f;
  f.theta_hat = -slope;
  f.amplitude_log = intercept;
  f.residual = rms / std::max(drop, 1e-300);
  return f;
}

DecayFit decay_fit(const std::vector<double>& times, const std::vector<double>& values) {
  return decay_fit(times, values, 0, times.size());
}

}  // namespace vefl
