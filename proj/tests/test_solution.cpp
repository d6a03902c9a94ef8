#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "planewave/solution.hpp"
#include "testutil.hpp"

using planewave::Complex;
using planewave::derived_quantities;
using planewave::DimensionlessParams;
using planewave::psi_free;
using planewave::psi_hat_exact;
using planewave::SpacetimePoint;
using planewave::Vec3;

namespace {

// Frozen end-to-end value from tools/highprec_reference.py:
// sigma=5, kappa=(0.3,0.2,0.4), a=0.05, p=(0.1,0.2,0.3,0.4), normalized.
const Complex kPsiPin{0.98280651150342256018, -0.20120433418279989449};

DimensionlessParams reference_params() {
  DimensionlessParams p;
  p.a = 0.05;
  p.sigma = 5.0;
  p.kappa = Vec3{0.3, 0.2, 0.4};
  return p;
}

}  // namespace

TEST_CASE("derived quantities at the worked reference point") {
  const auto d = derived_quantities(reference_params());
  CHECK(d.gamma == -0.4);
  CHECK(std::abs(d.delta - (-4.16)) < 1e-15);
  CHECK(std::abs(d.energy_scaled - 0.029) < 1e-17);
  CHECK(std::abs(d.epsilon_scaled - 0.429) < 1e-15);
  CHECK(std::abs(d.laguerre_degree - Complex{4.9, -0.3}) < 1e-15);
  CHECK(std::abs(d.laguerre_order - Complex{-10.8, 0.0}) < 1e-15);
}

TEST_CASE("zero momentum collapses the derived quantities") {
  DimensionlessParams p;
  p.sigma = 7.5;
  const auto d = derived_quantities(p);
  CHECK(d.gamma == 0.0);
  CHECK(d.delta == 0.0);
  CHECK(d.energy_scaled == 0.0);
  CHECK(d.epsilon_scaled == 0.0);
  CHECK(d.laguerre_degree == Complex{7.0, 0.0});
  CHECK(d.laguerre_order == Complex{-15.0, 0.0});
}

TEST_CASE("gamma solves its quadratic and the energies are consistent") {
  std::mt19937_64 rng(0x5eed5001);
  for (int i = 0; i < 100; ++i) {
    DimensionlessParams p;
    p.a = testutil::uniform(rng, 0.0, 0.3);
    p.sigma = std::exp(testutil::uniform(rng, std::log(0.5), std::log(200.0)));
    p.kappa = Vec3{testutil::uniform(rng, -2.0, 2.0),
                   testutil::uniform(rng, -2.0, 2.0),
                   testutil::uniform(rng, -2.0, 2.0)};
    const auto d = derived_quantities(p);
    CAPTURE(i, p.sigma, p.kappa.z);
    CHECK(std::abs(d.gamma * d.gamma - 2.0 * p.sigma * d.gamma + d.delta) <
          1e-12 * std::max(1.0, std::abs(d.delta)));
    CHECK(std::abs(d.energy_scaled - (d.epsilon_scaled + d.gamma)) <
          4e-15 * std::max(1.0, std::abs(d.energy_scaled)));
  }
}

TEST_CASE("free solution basics") {
  DimensionlessParams still;
  still.sigma = 3.0;
  CHECK(psi_free({0.7, -1.2, 0.5, 2.0}, still) == Complex{1.0, 0.0});

  const auto p = reference_params();
  CHECK(psi_free({0, 0, 0, 0}, p) == Complex{1.0, 0.0});
  CHECK(std::abs(std::abs(psi_free({1.0, 2.0, 3.0, 4.0}, p)) - 1.0) < 1e-15);
}

TEST_CASE("a = 0 reduces the exact solution to the free particle") {
  std::mt19937_64 rng(0x5eed5002);
  for (int i = 0; i < 1000; ++i) {
    DimensionlessParams p;
    p.a = 0.0;
    p.sigma = std::exp(testutil::uniform(rng, std::log(0.5), std::log(100.0)));
    p.kappa = Vec3{testutil::uniform(rng, -2.0, 2.0),
                   testutil::uniform(rng, -2.0, 2.0),
                   testutil::uniform(rng, -2.0, 2.0)};
    const SpacetimePoint pt{testutil::uniform(rng, -M_PI, M_PI),
                            testutil::uniform(rng, -M_PI, M_PI),
                            testutil::uniform(rng, -M_PI, M_PI),
                            testutil::uniform(rng, -M_PI, M_PI)};
    const Complex exact = psi_hat_exact(pt, p);
    const Complex free = psi_free(pt, p);
    CAPTURE(i);
    CHECK(std::abs(exact.real() - free.real()) <= 1e-15);
    CHECK(std::abs(exact.imag() - free.imag()) <= 1e-15);
  }
}

TEST_CASE("exact solution matches the high-precision pin") {
  const Complex v = psi_hat_exact({0.1, 0.2, 0.3, 0.4}, reference_params());
  CHECK(std::abs(v.real() - kPsiPin.real()) < 5e-14);
  CHECK(std::abs(v.imag() - kPsiPin.imag()) < 5e-14);
}

TEST_CASE("at the origin only the field factor survives") {
  const auto params = reference_params();
  const auto d = derived_quantities(params);
  const Complex expected =
      std::exp(Complex(0.0, -params.a)) *
      planewave::kummer_1f1(-d.laguerre_degree, d.laguerre_order + 1.0,
                            Complex(0.0, 2.0 * params.a));
  const Complex v = psi_hat_exact({0, 0, 0, 0}, params);
  CHECK(std::abs(v - expected) < 1e-15);
}

TEST_CASE("modulus depends only on zeta - tau") {
  // Dyadic zeta/tau values keep zeta - tau exact, so two points sharing the
  // difference differ only in pure-phase factors.
  const auto params = reference_params();
  std::mt19937_64 rng(0x5eed5003);
  for (int i = 0; i < 200; ++i) {
    const double delta = std::floor(testutil::uniform(rng, -192.0, 192.0)) / 64.0;
    const double tau1 = std::floor(testutil::uniform(rng, -192.0, 192.0)) / 64.0;
    const double tau2 = std::floor(testutil::uniform(rng, -192.0, 192.0)) / 64.0;
    const SpacetimePoint p1{testutil::uniform(rng, -M_PI, M_PI),
                            testutil::uniform(rng, -M_PI, M_PI), delta + tau1,
                            tau1};
    const SpacetimePoint p2{testutil::uniform(rng, -M_PI, M_PI),
                            testutil::uniform(rng, -M_PI, M_PI), delta + tau2,
                            tau2};
    CAPTURE(i, delta);
    CHECK(std::abs(std::abs(psi_hat_exact(p1, params)) -
                   std::abs(psi_hat_exact(p2, params))) < 1e-13);
  }
}

TEST_CASE("field-dressed core is 2 pi periodic in the light-cone variable") {
  const auto params = reference_params();
  std::mt19937_64 rng(0x5eed5004);
  const auto core = [&](const SpacetimePoint& p) {
    // psi divided by the free plane wave leaves the u-dependent factor.
    return psi_hat_exact(p, params) * std::conj(psi_free(p, params));
  };
  for (int i = 0; i < 100; ++i) {
    const SpacetimePoint p{testutil::uniform(rng, -M_PI, M_PI),
                           testutil::uniform(rng, -M_PI, M_PI),
                           testutil::uniform(rng, -M_PI, M_PI),
                           testutil::uniform(rng, -M_PI, M_PI)};
    const SpacetimePoint shifted{p.xi, p.upsilon, p.zeta + 2.0 * M_PI, p.tau};
    CAPTURE(i);
    CHECK(std::abs(core(p) - core(shifted)) < 1e-13);
  }
}

TEST_CASE("raw form equals the normalized form times the constant") {
  const auto params = reference_params();
  const auto d = derived_quantities(params);
  const Complex prefactor = planewave::laguerre_general(
      d.laguerre_degree, d.laguerre_order, Complex{0.0, 0.0});
  const SpacetimePoint p{0.5, -0.3, 1.1, 0.2};
  const Complex raw = psi_hat_exact(p, params, {}, false);
  const Complex normalized = psi_hat_exact(p, params, {}, true);
  CHECK(std::abs(raw - prefactor * normalized) < 1e-12 * std::abs(raw));
}

TEST_CASE("a degenerate Laguerre order surfaces as an error") {
  // m + 1 = 1 - 2 kappa_z - 2 sigma = 0 exactly.
  DimensionlessParams p;
  p.a = 0.1;
  p.sigma = 0.3;
  p.kappa = Vec3{0.0, 0.0, 0.2};
  CHECK_THROWS_AS(psi_hat_exact({0.1, 0.2, 0.3, 0.4}, p),
                  planewave::DegenerateOrderError);
}
