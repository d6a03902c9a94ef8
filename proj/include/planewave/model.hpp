#pragma once

// Physical configuration and its reduction to the dimensionless triple
// (a, sigma, kappa) that every downstream evaluator works in. Lengths are
// measured in 1/k and times in 1/(kc); in these units the Schrodinger
// equation for the plane-wave field reads
//
//   i 2 sigma dpsi/dtau = -lap psi + 2i a e^{i(zeta-tau)} dpsi/dxi
//                         + a^2 e^{2i(zeta-tau)} psi .

#include <cmath>
#include <stdexcept>

#include "planewave/specfun.hpp"

namespace planewave {

class UnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class UnitSystem { si, atomic, dimensionless };

/// Wavevector-like 3-vector (components scaled by 1/k once dimensionless).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double squared_norm() const { return x * x + y * y + z * z; }
};

/// Raw physical inputs. Field units follow unit_system.
struct PhysicalConfig {
  double vector_potential_amplitude = 0.0;  // A0
  double wavenumber = 0.0;                  // k > 0
  double particle_charge = 0.0;             // e
  double particle_mass = 0.0;               // m > 0
  UnitSystem unit_system = UnitSystem::dimensionless;
};

/// The whole problem, reduced: scaled field strength a, mass/photon ratio
/// sigma = mc/(hbar k), and the electron wavevector in units of k.
struct DimensionlessParams {
  double a = 0.0;
  double sigma = 1.0;
  Vec3 kappa;
};

/// Dimensionless coordinates (xi, upsilon, zeta, tau) = (kx, ky, kz, kct).
struct SpacetimePoint {
  double xi = 0.0;
  double upsilon = 0.0;
  double zeta = 0.0;
  double tau = 0.0;
};

namespace constants {
// CODATA-2018.
inline constexpr double hbar_si = 1.054571817e-34;         // J s
inline constexpr double c_si = 299792458.0;                // m / s
inline constexpr double inverse_fine_structure = 137.035999084;
}  // namespace constants

inline void validate(const DimensionlessParams& p) {
  if (!(p.a >= 0.0) || !std::isfinite(p.a))
    throw InvalidConfig("params: a must be finite and >= 0");
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma))
    throw InvalidConfig("params: sigma must be finite and > 0");
  if (!std::isfinite(p.kappa.x) || !std::isfinite(p.kappa.y) ||
      !std::isfinite(p.kappa.z))
    throw InvalidConfig("params: kappa components must be finite");
}

inline void validate(const PhysicalConfig& cfg) {
  if (!(cfg.wavenumber > 0.0) || !std::isfinite(cfg.wavenumber))
    throw InvalidConfig("physical: wavenumber must be finite and > 0");
  if (!(cfg.particle_mass > 0.0) || !std::isfinite(cfg.particle_mass))
    throw InvalidConfig("physical: mass must be finite and > 0");
  if (!(cfg.vector_potential_amplitude >= 0.0) ||
      !std::isfinite(cfg.vector_potential_amplitude))
    throw InvalidConfig("physical: A0 must be finite and >= 0");
  if (!std::isfinite(cfg.particle_charge))
    throw InvalidConfig("physical: charge must be finite");
}

/// Reduce a physical configuration and electron wavevector to (a, sigma,
/// kappa). In SI and atomic units a = e A0 / (hbar c k) and
/// sigma = m c / (hbar k). With unit_system == dimensionless the fields are
/// already pure numbers (hbar = c = 1); charge and wavenumber must then be
/// exactly 1 so the map is the identity (A0, mass, kprime) -> (a, sigma,
/// kappa).
inline DimensionlessParams to_dimensionless(const PhysicalConfig& cfg,
                                            const Vec3& kprime) {
  validate(cfg);

  double hbar = 1.0;
  double c = 1.0;
  switch (cfg.unit_system) {
    case UnitSystem::si:
      hbar = constants::hbar_si;
      c = constants::c_si;
      break;
    case UnitSystem::atomic:
      hbar = 1.0;
      c = constants::inverse_fine_structure;
      break;
    case UnitSystem::dimensionless:
      if (cfg.particle_charge != 1.0 || cfg.wavenumber != 1.0)
        throw UnitError(
            "dimensionless units: charge and wavenumber must both be 1");
      break;
  }

  const double k = cfg.wavenumber;
  DimensionlessParams out;
  out.a = cfg.particle_charge * cfg.vector_potential_amplitude / (hbar * c * k);
  out.sigma = cfg.particle_mass * c / (hbar * k);
  out.kappa = Vec3{kprime.x / k, kprime.y / k, kprime.z / k};
  validate(out);
  return out;
}

/// u = exp(i (zeta - tau)), the field phase on the unit circle. Depends on
/// the point only through zeta - tau.
inline Complex light_cone_phase(const SpacetimePoint& p) {
  const double d = p.zeta - p.tau;
  return Complex(std::cos(d), std::sin(d));
}

}  // namespace planewave
