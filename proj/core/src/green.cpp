#include "veflab/green.hpp"

#include <cmath>
#include <stdexcept>

namespace vefl {

EigenPair eigenvalues(double mu, double xi) {
  if (!(mu > 0.0)) throw std::invalid_argument("eigenvalues: mu must be > 0");
  if (!(xi >= 0.0)) throw std::invalid_argument("eigenvalues: |xi| must be >= 0");
  if (xi == 0.0) return {0.0, 0.0};
  const double b2 = xi * xi;
  const double disc = mu * mu * b2 * b2 - 4.0 * b2;
  EigenPair e;
  if (disc >= 0.0) {
    // pick the non-cancelling root, recover the other from the product
    double lm = 0.5 * (-mu * b2 - std::sqrt(disc));
    e.minus = lm;
    e.plus = b2 / lm;
  } else {
    double re = -0.5 * mu * b2;
    double im = 0.5 * std::sqrt(-disc);
    e.plus = {re, im};
    e.minus = {re, -im};
  }
  return e;
}

GreenEntries green_entries(double mu, double xi, double t) {
  if (t < 0.0) throw std::invalid_argument("green_entries: t must be >= 0");
  if (xi == 0.0) return {1.0, 0.0, 0.0, 1.0};
  EigenPair e = eigenvalues(mu, xi);
  std::complex<double> d = e.plus - e.minus;
  const double scale = std::max(1.0, mu * xi * xi);
  GreenEntries g;
  if (std::abs(d) < 1e-8 * scale) {
    // confluent branch at the double root lambda = -mu |xi|^2 / 2
    double l = -0.5 * mu * xi * xi;
    double elt = std::exp(l * t);
    g.g_cc = elt * (1.0 - l * t);
    g.g_cv = -xi * t * elt;
    g.g_vc = xi * t * elt;
    g.g_vv = elt * (1.0 + l * t);
    return g;
  }
  std::complex<double> ep = std::exp(e.plus * t);
  std::complex<double> em = std::exp(e.minus * t);
  g.g_cc = ((e.plus * em - e.minus * ep) / d).real();
  g.g_cv = (-(ep - em) * xi / d).real();
  g.g_vc = -g.g_cv;
  g.g_vv = ((e.plus * ep - e.minus * em) / d).real();
  return g;
}

GreenEntries compose(const GreenEntries& a, const GreenEntries& b) {
  GreenEntries g;
  g.g_cc = a.g_cc * b.g_cc + a.g_cv * b.g_vc;
  g.g_cv = a.g_cc * b.g_cv + a.g_cv * b.g_vv;
  g.g_vc = a.g_vc * b.g_cc + a.g_vv * b.g_vc;
  g.g_vv = a.g_vc * b.g_cv + a.g_vv * b.g_vv;
  return g;
}

HighFreqParts highfreq_decompose(double mu, double xi, double t) {
  if (!(mu * xi >= 2.0))
    throw std::invalid_argument(
        "highfreq_decompose: requires the real-eigenvalue regime mu |xi| >= 2");
  GreenEntries g = green_entries(mu, xi, t);
  HighFreqParts p;
  p.g1 = g.g_cv;
  p.g2_top = g.g_cc - std::exp(-t / mu);
  p.g2_bot = g.g_vv - std::exp(-mu * xi * xi * t);
  return p;
}

std::array<std::array<double, 2>, 2> mode_oracle(double mu, double xi, double t,
                                                 long n_steps) {
  if (t < 0.0) throw std::invalid_argument("mode_oracle: t must be >= 0");
  long required = static_cast<long>(std::ceil(100.0 * t * std::max(1.0, mu * xi * xi)));
  if (n_steps < required)
    throw std::invalid_argument("mode_oracle: step count too small for this (mu, xi, t)");
  std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
  if (t == 0.0) return m;
  const double a01 = -xi, a10 = xi, a11 = -mu * xi * xi;
  auto rhs = [&](const std::array<std::array<double, 2>, 2>& y) {
    std::array<std::array<double, 2>, 2> r;
    for (int j = 0; j < 2; ++j) {
      r[0][j] = a01 * y[1][j];
      r[1][j] = a10 * y[0][j] + a11 * y[1][j];
    }
    return r;
  };
  const double h = t / static_cast<double>(n_steps);
  for (long s = 0; s < n_steps; ++s) {
    auto k1 = rhs(m);
    std::array<std::array<double, 2>, 2> y2, y3, y4;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) y2[i][j] = m[i][j] + 0.5 * h * k1[i][j];
    auto k2 = rhs(y2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) y3[i][j] = m[i][j] + 0.5 * h * k2[i][j];
    auto k3 = rhs(y3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) y4[i][j] = m[i][j] + h * k3[i][j];
    auto k4 = rhs(y4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m[i][j] += h / 6.0 * (k1[i][j] + 2.0 * k2[i][j] + 2.0 * k3[i][j] + k4[i][j]);
  }
  return m;
}

std::pair<SpectralField, SpectralField> evolve_linear(const SpectralField& c0,
                                                      const SpectralField& v0, double mu,
                                                      double t) {
  if (!same_shape(c0, v0))
    throw std::invalid_argument("evolve_linear: (c, v) shape mismatch");
  const Grid& g = c0.grid();
  SpectralField c(c0.grid_ptr(), c0.rank());
  SpectralField v(v0.grid_ptr(), v0.rank());
  for (std::size_t idx = 0; idx < g.modes(); ++idx) {
    GreenEntries e = green_entries(mu, g.wavenumber(idx), t);
    for (int comp = 0; comp < c0.components(); ++comp) {
      auto ch = c0.at(comp, idx);
      auto vh = v0.at(comp, idx);
      c.at(comp, idx) = e.g_cc * ch + e.g_cv * vh;
      v.at(comp, idx) = e.g_vc * ch + e.g_vv * vh;
    }
  }
  return {std::move(c), std::move(v)};
}

}  // namespace vefl
