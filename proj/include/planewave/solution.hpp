#pragma once

// Derived-quantity algebra and the exact wavefunction for a charged particle
// in a monochromatic plane-wave field polarized along x.

#include <cmath>
#include <complex>

#include "planewave/model.hpp"
#include "planewave/specfun.hpp"

namespace planewave {

/// Constants fixed by (a, sigma, kappa): the light-cone exponent gamma, the
/// reduced separation constant delta, scaled energies, and the complex
/// Laguerre indices of the exact solution.
struct DerivedQuantities {
  double gamma = 0.0;           // -kappa_z
  double delta = 0.0;           // root of gamma^2 - 2 sigma gamma + delta = 0
  double epsilon_scaled = 0.0;  // ansatz energy, units hbar k c
  double energy_scaled = 0.0;   // free-particle energy |kappa|^2 / (2 sigma)
  Complex laguerre_degree;      // n = sigma - 1/2 + kappa_z - i kappa_x
  Complex laguerre_order;       // m = -2 kappa_z - 2 sigma
};

inline DerivedQuantities derived_quantities(const DimensionlessParams& params) {
  const Vec3& k = params.kappa;
  DerivedQuantities dq;
  dq.gamma = -k.z;
  dq.delta = -k.z * k.z - 2.0 * params.sigma * k.z;
  dq.energy_scaled = k.squared_norm() / (2.0 * params.sigma);
  dq.epsilon_scaled = dq.energy_scaled - dq.gamma;
  dq.laguerre_degree = Complex(params.sigma - 0.5 + k.z, -k.x);
  dq.laguerre_order = Complex(-2.0 * k.z - 2.0 * params.sigma, 0.0);
  return dq;
}

namespace detail {

// Free plane-wave phase E*tau + kappa.r, shared by psi_free and
// psi_hat_exact so the a = 0 limit reproduces psi_free bit for bit.
inline double free_phase(const SpacetimePoint& p, const Vec3& kappa,
                         double energy_scaled) {
  return energy_scaled * p.tau + kappa.x * p.xi + kappa.y * p.upsilon +
         kappa.z * p.zeta;
}

}  // namespace detail

/// Free-particle plane wave exp(-i E tau - i kappa.r).
inline Complex psi_free(const SpacetimePoint& p,
                        const DimensionlessParams& params) {
  const DerivedQuantities dq = derived_quantities(params);
  return std::polar(1.0, -detail::free_phase(p, params.kappa, dq.energy_scaled));
}

/// Exact solution evaluated at one spacetime point:
///
///   psi = exp(-i E tau - i kappa.r - i a u) L_n^m(2 i a u),  u = e^{i(zeta-tau)}
///
/// By default the gamma prefactor of L_n^m is dropped (normalized form); pass
/// normalized = false for the full associated Laguerre value. The u^gamma
/// factor of the separable form is already folded into the E phase, so no
/// complex power is ever taken and there is no branch ambiguity.
inline Complex psi_hat_exact(const SpacetimePoint& p,
                             const DimensionlessParams& params,
                             const SeriesControl& ctl = {},
                             bool normalized = true) {
  const DerivedQuantities dq = derived_quantities(params);
  const Complex u = light_cone_phase(p);
  const Complex au = params.a * u;

  const Complex laguerre =
      laguerre_general(dq.laguerre_degree, dq.laguerre_order,
                       Complex(0.0, 2.0) * au, ctl, !normalized);

  const Complex plane =
      std::polar(1.0, -detail::free_phase(p, params.kappa, dq.energy_scaled));
  return plane * std::exp(Complex(0.0, -1.0) * au) * laguerre;
}

}  // namespace planewave
