// Minimal tour of the library: reduce a configuration, evaluate the exact
// wavefunction along the propagation axis, and certify it by a convergence
// study. Build target: quickstart.

#include <cstdio>

#include "planewave/solution.hpp"
#include "planewave/verify.hpp"

int main() {
  planewave::DimensionlessParams params;
  params.a = 0.05;               // field strength
  params.sigma = 5.0;            // mass scale
  params.kappa = {0.3, 0.2, 0.4};  // scaled momentum

  const auto dq = planewave::derived_quantities(params);
  std::printf("gamma=%g delta=%g energy=%g\n", dq.gamma, dq.delta,
              dq.energy_scaled);
  std::printf("laguerre degree n = %g%+gi, order m = %g%+gi\n",
              dq.laguerre_degree.real(), dq.laguerre_degree.imag(),
              dq.laguerre_order.real(), dq.laguerre_order.imag());

  std::printf("\n%8s %12s %12s\n", "zeta", "|psi|", "arg(psi)");
  for (int i = 0; i <= 8; ++i) {
    const double zeta = i * 0.25;
    const planewave::SpacetimePoint p{0.1, 0.0, zeta, 0.0};
    const planewave::Complex psi = planewave::psi_hat_exact(p, params);
    std::printf("%8.2f %12.6f %12.6f\n", zeta, std::abs(psi), std::arg(psi));
  }

  const auto report = planewave::residual_convergence(
      planewave::sample_points(1, 10), params, {1e-2, 5e-3, 2.5e-3});
  std::printf("\nresidual convergence: fitted order %.3f, extrapolated %g\n",
              report.fitted_order, report.extrapolated_residual);
  return 0;
}
