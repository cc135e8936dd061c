#pragma once

#include <cstddef>
#include <vector>

namespace vefl {

// Result of fitting norm(t) ~ exp(amplitude_log - theta_hat * t) on a
// window of samples. residual is the RMS log-space deviation divided by
// the total fitted log drop across the window (0 for a pure exponential).
struct DecayFit {
  double theta_hat;
  double amplitude_log;
  double residual;
};

// Least-squares slope of log(values) against times over indices [lo, hi).
// Requires hi - lo >= 2 and strictly positive values on the window.
DecayFit decay_fit(const std::vector<double>& times, const std::vector<double>& values,
                   std::size_t lo, std::size_t hi);

// Convenience overload over the whole series.
DecayFit decay_fit(const std::vector<double>& times, const std::vector<double>& values);

}  // namespace vefl
