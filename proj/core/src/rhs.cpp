#include "veflab/rhs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "veflab/fft.hpp"
#include "veflab/ops.hpp"

namespace vefl {

namespace {

void check_finite(const SpectralField& f, const char* where) {
  for (int c = 0; c < f.components(); ++c)
    for (std::size_t i = 0; i < f.grid().modes(); ++i) {
      const auto& z = f.at(c, i);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::runtime_error(std::string(where) +
                                 ": non-finite values in tendencies");
    }
}

}  // namespace

Tendencies quadratic_tendencies(const FlowState& state, double dealias_fraction) {
  const SpectralField& v = state.velocity;
  const SpectralField& e = state.strain;
  GridPtr gp = v.grid_ptr();
  const Grid& g = *gp;
  const int n = g.dim();

  PhysicalField v_phys = inverse_transform(v);
  PhysicalField grad_v_phys = inverse_transform(gradient(v));
  PhysicalField e_phys = inverse_transform(e);
  std::vector<PhysicalField> de;  // de[l] = d_l E
  de.reserve(n);
  for (int l = 0; l < n; ++l)
    de.push_back(inverse_transform(spectral_derivative(e, l)));

  PhysicalField dv_acc(gp, Rank::vector);
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < g.modes(); ++x) {
      double val = 0.0;
      for (int l = 0; l < n; ++l)
        val -= v_phys.at(l, x) * grad_v_phys.at(tensor_component(i, l, n), x);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          val += e_phys.at(tensor_component(j, k, n), x) *
                 de[j].at(tensor_component(i, k, n), x);
      dv_acc.at(i, x) = val;
    }

  PhysicalField dE_acc(gp, Rank::tensor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int c = tensor_component(i, j, n);
      for (std::size_t x = 0; x < g.modes(); ++x) {
        double val = 0.0;
        for (int l = 0; l < n; ++l) {
          val -= v_phys.at(l, x) * de[l].at(c, x);
          val += grad_v_phys.at(tensor_component(i, l, n), x) *
                 e_phys.at(tensor_component(l, j, n), x);
        }
        dE_acc.at(c, x) = val;
      }
    }

  Tendencies out(gp);
  out.dv = forward_transform(dv_acc);
  apply_dealias(out.dv, dealias_fraction);
  out.dv = leray_project(out.dv);
  out.dE = forward_transform(dE_acc);
  apply_dealias(out.dE, dealias_fraction);
  check_finite(out.dv, "quadratic_tendencies");
  check_finite(out.dE, "quadratic_tendencies");
  return out;
}

Tendencies nonlinear_rhs(const FlowState& state, double mu, double dealias_fraction) {
  if (mu <= 0.0) throw std::invalid_argument("nonlinear_rhs: mu must be > 0");
  Tendencies out = quadratic_tendencies(state, dealias_fraction);
  SpectralField coupling = leray_project(divergence_tensor(state.strain));
  axpy(1.0, coupling, out.dv);
  SpectralField visc = laplacian(state.velocity);
  axpy(mu, visc, out.dv);
  SpectralField stretch = gradient(state.velocity);
  axpy(1.0, stretch, out.dE);
  check_finite(out.dv, "nonlinear_rhs");
  check_finite(out.dE, "nonlinear_rhs");
  return out;
}

double stress_form_gap(const SpectralField& strain, double dealias_fraction) {
  GridPtr gp = strain.grid_ptr();
  const Grid& g = *gp;
  const int n = g.dim();
  PhysicalField e_phys = inverse_transform(strain);
  std::vector<PhysicalField> de;
  de.reserve(n);
  for (int l = 0; l < n; ++l)
    de.push_back(inverse_transform(spectral_derivative(strain, l)));

  PhysicalField adv_acc(gp, Rank::vector);
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < g.modes(); ++x) {
      double val = 0.0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          val += e_phys.at(tensor_component(j, k, n), x) *
                 de[j].at(tensor_component(i, k, n), x);
      adv_acc.at(i, x) = val;
    }
  SpectralField adv = forward_transform(adv_acc);
  apply_dealias(adv, dealias_fraction);

  // conservative form d_j (E E^T)_ij through the tensor divergence
  PhysicalField w(gp, Rank::tensor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int c = tensor_component(i, j, n);
      for (std::size_t x = 0; x < g.modes(); ++x) {
        double val = 0.0;
        for (int k = 0; k < n; ++k)
          val += e_phys.at(tensor_component(i, k, n), x) *
                 e_phys.at(tensor_component(j, k, n), x);
        w.at(c, x) = val;
      }
    }
  SpectralField w_spec = forward_transform(w);
  apply_dealias(w_spec, dealias_fraction);
  SpectralField cons = divergence_tensor(w_spec);

  axpy(-1.0, adv, cons);
  double denom = spectral_l2_norm(adv);
  return spectral_l2_norm(cons) / std::max(denom, 1e-300);
}

}  // namespace vefl
