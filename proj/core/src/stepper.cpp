#include "veflab/stepper.hpp"

#include <cmath>
#include <complex>
#include <iostream>
#include <limits>

#include "veflab/fft.hpp"
#include "veflab/ops.hpp"

namespace vefl {

GreenTable::GreenTable(GridPtr grid, double mu, double dt)
    : grid_(std::move(grid)), mu_(mu), dt_(dt) {
  entries_.reserve(grid_->modes());
  for (std::size_t idx = 0; idx < grid_->modes(); ++idx)
    entries_.push_back(green_entries(mu_, grid_->wavenumber(idx), dt_));
}

namespace {

// apply the Green matrix to the pair (v, E) modewise; works for
// tendency pairs as well since they transform the same way
void propagate_pair(const GreenTable& table, SpectralField& v, SpectralField& e) {
  const Grid& g = table.grid();
  const int n = g.dim();
  const std::complex<double> imag_unit(0.0, 1.0);
  for (std::size_t idx = 0; idx < g.modes(); ++idx) {
    double xi_norm = g.wavenumber(idx);
    if (xi_norm == 0.0) continue;  // zero mode: identity
    const GreenEntries& ge = table.at(idx);
    auto xi = g.wavevector(idx);
    for (int i = 0; i < n; ++i) {
      std::complex<double> c_hat = 0.0;
      for (int j = 0; j < n; ++j)
        c_hat += imag_unit * xi[j] * e.at(tensor_component(i, j, n), idx);
      c_hat /= xi_norm;
      std::complex<double> v_hat = v.at(i, idx);
      std::complex<double> c_new = ge.g_cc * c_hat + ge.g_cv * v_hat;
      std::complex<double> v_new = ge.g_vc * c_hat + ge.g_vv * v_hat;
      v.at(i, idx) = v_new;
      std::complex<double> dc = c_new - c_hat;
      for (int j = 0; j < n; ++j)
        e.at(tensor_component(i, j, n), idx) -= imag_unit * xi[j] * dc / xi_norm;
    }
  }
}

}  // namespace

FlowState linear_propagate(const FlowState& state, const GreenTable& table) {
  FlowState out = state;
  propagate_pair(table, out.velocity, out.strain);
  out.time = state.time + table.dt();
  return out;
}

FlowState linear_propagate(const FlowState& state, double mu, double dt) {
  GreenTable table(state.velocity.grid_ptr(), mu, dt);
  return linear_propagate(state, table);
}

FlowState etd_step(const FlowState& state, const GreenTable& table,
                   double dealias_fraction, bool nonlinear, StepInfo* info) {
  const double dt = table.dt();
  if (info != nullptr || nonlinear) {
    double sup = grid_lp_norm(inverse_transform(state.velocity),
                              std::numeric_limits<double>::infinity());
    bool warn = sup * dt / table.grid().spacing() > 0.5;
    if (info != nullptr) {
      info->max_speed = sup;
      info->cfl_warning = warn;
    } else if (warn) {
      std::cerr << "etd_step: advective CFL exceeded (max|v| dt / dx = "
                << sup * dt / table.grid().spacing() << ")\n";
    }
  }
  if (!nonlinear) return linear_propagate(state, table);

  FlowState base = linear_propagate(state, table);  // G u_n
  Tendencies n0 = quadratic_tendencies(state, dealias_fraction);
  propagate_pair(table, n0.dv, n0.dE);  // G N(u_n)

  FlowState mid(state.velocity.grid_ptr(), state.time + dt);
  mid.velocity = base.velocity;
  axpy(dt, n0.dv, mid.velocity);
  mid.velocity = leray_project(mid.velocity);
  mid.strain = base.strain;
  axpy(dt, n0.dE, mid.strain);

  Tendencies n1 = quadratic_tendencies(mid, dealias_fraction);

  FlowState out(state.velocity.grid_ptr(), state.time + dt);
  out.velocity = base.velocity;
  axpy(0.5 * dt, n0.dv, out.velocity);
  axpy(0.5 * dt, n1.dv, out.velocity);
  out.velocity = leray_project(out.velocity);
  out.strain = base.strain;
  axpy(0.5 * dt, n0.dE, out.strain);
  axpy(0.5 * dt, n1.dE, out.strain);
  return out;
}

}  // namespace vefl
