#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "planewave/specfun.hpp"
#include "testutil.hpp"

using planewave::Complex;
using planewave::kummer_1f1;
using planewave::laguerre_general;
using planewave::log_gamma;
using planewave::SeriesControl;

namespace {

// Frozen values from tools/highprec_reference.py (50+ digit working
// precision, truncated to the shown digits).
const Complex kLogGamma1p1i{-0.65092319930185633889, -0.30164032046753319789};
const double kLogGamma5 = 3.1780538303479456196;
const double kLogGammaHalf = 0.57236494292470008707;
const Complex kKummerPin{-8.025032929104279081, -47.950996100165103393};
const Complex kExpPin{1.9736117246291248654, 0.40007090277990224057};
const Complex kLaguerrePrefactorPin{-47.233626713852179243,
                                    -107.04456399639905859};

double dist_npi(Complex z) {
  const double nearest = std::min(0.0, std::round(z.real()));
  return std::abs(z - Complex(nearest, 0.0));
}

// Fold an angle-like quantity into (-pi, pi]; branch identities for
// log-gamma only hold modulo 2*pi on the imaginary part.
double fold_2pi(double x) { return std::remainder(x, 2.0 * M_PI); }

// 4th-order central difference along direction `dir` (|dir| = 1).
template <typename F>
Complex fd_derivative(const F& f, Complex z, Complex dir, double h) {
  return (-f(z + 2.0 * h * dir) + 8.0 * f(z + h * dir) - 8.0 * f(z - h * dir) +
          f(z - 2.0 * h * dir)) /
         (12.0 * h * dir);
}

}  // namespace

TEST_CASE("log_gamma reproduces classic real-axis values") {
  const Complex g5 = log_gamma({5.0, 0.0});
  CHECK(std::abs(g5.real() - kLogGamma5) < 1e-13);
  CHECK(std::abs(g5.imag()) < 1e-14);
  CHECK(std::abs(std::exp(g5).real() - 24.0) < 1e-11);

  const Complex gh = log_gamma({0.5, 0.0});
  CHECK(std::abs(gh.real() - kLogGammaHalf) < 1e-13);
  CHECK(std::abs(gh.imag()) < 1e-14);
}

TEST_CASE("log_gamma matches the high-precision pin at 1+1i") {
  const Complex g = log_gamma({1.0, 1.0});
  CHECK(std::abs(g - kLogGamma1p1i) < 1e-13);
}

TEST_CASE("log_gamma recurrence holds across the plane") {
  std::mt19937_64 rng(0x5eedf001);
  for (int i = 0; i < 300; ++i) {
    Complex z;
    do {
      z = {testutil::uniform(rng, -10.0, 10.0),
           testutil::uniform(rng, -10.0, 10.0)};
    } while (dist_npi(z) < 0.1 || dist_npi(z + 1.0) < 0.1);

    const Complex lhs = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    const double tol =
        1e-12 * std::max(1.0, std::abs(log_gamma(z)) + std::abs(log_gamma(z + 1.0)));
    CAPTURE(i, z.real(), z.imag());
    CHECK(std::abs(lhs.real()) < tol);
    CHECK(std::abs(fold_2pi(lhs.imag())) < tol);
  }
}

TEST_CASE("log_gamma reflection holds modulo 2 pi i") {
  std::mt19937_64 rng(0x5eedf002);
  for (int i = 0; i < 300; ++i) {
    Complex z;
    do {
      z = {testutil::uniform(rng, -5.0, 5.0),
           testutil::uniform(rng, -3.0, 3.0)};
    } while (dist_npi(z) < 0.1 || dist_npi(1.0 - z) < 0.1 ||
             std::abs(z.imag()) < 0.05);

    const Complex lhs = log_gamma(z) + log_gamma(1.0 - z) -
                        (std::log(Complex(M_PI, 0.0)) -
                         std::log(std::sin(M_PI * z)));
    const double tol =
        1e-12 * std::max(1.0, std::abs(log_gamma(z)) + std::abs(log_gamma(1.0 - z)));
    CAPTURE(i, z.real(), z.imag());
    CHECK(std::abs(lhs.real()) < tol);
    CHECK(std::abs(fold_2pi(lhs.imag())) < tol);
  }
}

TEST_CASE("log_gamma rejects nonpositive-integer poles") {
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), planewave::PoleError);
  CHECK_THROWS_AS(log_gamma({-1.0, 0.0}), planewave::PoleError);
  CHECK_THROWS_AS(log_gamma({-7.0, 0.0}), planewave::PoleError);
  CHECK_THROWS_AS(log_gamma({-3.0, 1e-13}), planewave::PoleError);
  CHECK_NOTHROW(log_gamma({-3.0 + 1e-6, 0.0}));
}

TEST_CASE("log_gamma surfaces overflow as an error, never as inf") {
  CHECK_THROWS_AS(log_gamma({1e308, 0.0}), planewave::OverflowError);
}

TEST_CASE("kummer_1f1 terminating and closed-form cases") {
  CHECK(kummer_1f1({2.5, -7.0}, {2.0, 3.0}, {0.0, 0.0}) == Complex{1.0, 0.0});

  const Complex third = kummer_1f1({-1.0, 0.0}, {3.0, 0.0}, {2.0, 0.0});
  CHECK(std::abs(third - Complex{1.0 / 3.0, 0.0}) < 1e-15);

  // 1F1(a; a; z) = exp(z).
  const Complex e = kummer_1f1({1.0, 0.0}, {1.0, 0.0}, {0.7, 0.2});
  CHECK(std::abs(e - kExpPin) < 1e-14 * std::abs(kExpPin));
}

TEST_CASE("kummer_1f1 matches the high-precision series pin") {
  const Complex v = kummer_1f1({2.5, -1.0}, {-3.2, 0.5}, {1.0, 1.0});
  CHECK(std::abs(v - kKummerPin) < 1e-12 * std::abs(kKummerPin));
}

TEST_CASE("kummer_1f1 is deterministic") {
  const Complex a{1.3, -0.4}, b{-2.7, 0.9}, z{0.8, -1.1};
  const Complex v1 = kummer_1f1(a, b, z);
  const Complex v2 = kummer_1f1(a, b, z);
  CHECK(v1.real() == v2.real());
  CHECK(v1.imag() == v2.imag());
}

TEST_CASE("Kummer transformation: exp(z) 1F1(b-a;b;-z) = 1F1(a;b;z)") {
  std::mt19937_64 rng(0x5eedf003);
  for (int i = 0; i < 300; ++i) {
    const Complex a = testutil::disk(rng, 20.0);
    Complex b;
    do {
      b = testutil::disk(rng, 20.0);
    } while (dist_npi(b) < 0.1);
    const Complex z = testutil::disk(rng, 2.0);

    const Complex rhs = kummer_1f1(a, b, z);
    const Complex lhs = std::exp(z) * kummer_1f1(b - a, b, -z);
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    CAPTURE(i, a, b, z);
    CHECK(std::abs(lhs - rhs) < 1e-10 * scale);
  }
}

TEST_CASE("contiguous derivative identity for 1F1") {
  std::mt19937_64 rng(0x5eedf004);
  const double h = 1e-4;
  for (int i = 0; i < 120; ++i) {
    const Complex a = testutil::disk(rng, 20.0);
    Complex b;
    do {
      b = testutil::disk(rng, 20.0);
    } while (dist_npi(b) < 0.1);
    const Complex z = testutil::disk(rng, 2.0);

    const auto f = [&](Complex w) { return kummer_1f1(a, b, w); };
    const Complex expected = (a / b) * kummer_1f1(a + 1.0, b + 1.0, z);
    const double tol = 1e-7 * std::max(1.0, std::abs(expected));

    CAPTURE(i, a, b, z);
    CHECK(std::abs(fd_derivative(f, z, {1.0, 0.0}, h) - expected) < tol);
    CHECK(std::abs(fd_derivative(f, z, {0.0, 1.0}, h) - expected) < tol);
  }
}

TEST_CASE("1F1 satisfies Kummer's differential equation") {
  std::mt19937_64 rng(0x5eedf005);
  const double h = 1e-4;
  for (int i = 0; i < 120; ++i) {
    const Complex a = testutil::disk(rng, 20.0);
    Complex b;
    do {
      b = testutil::disk(rng, 20.0);
    } while (dist_npi(b) < 0.1);
    const Complex z = testutil::disk(rng, 2.0);

    const Complex w = kummer_1f1(a, b, z);
    const Complex wp = (a / b) * kummer_1f1(a + 1.0, b + 1.0, z);
    // w'' by finite differences of the analytic first derivative, so the
    // ODE check is not a circular application of the same identity twice.
    const auto fp = [&](Complex v) {
      return (a / b) * kummer_1f1(a + 1.0, b + 1.0, v);
    };
    const Complex wpp = fd_derivative(fp, z, {1.0, 0.0}, h);

    const Complex residual = z * wpp + (b - z) * wp - a * w;
    const double bound =
        1e-6 * (std::abs(a * w) + std::abs(b * wp) + 1.0);
    CAPTURE(i, a, b, z);
    CHECK(std::abs(residual) < bound);
  }
}

TEST_CASE("normalized Laguerre matches its 3-term expansion for small x") {
  std::mt19937_64 rng(0x5eedf006);
  for (int i = 0; i < 300; ++i) {
    const Complex n = testutil::disk(rng, 20.0);
    Complex m;
    do {
      m = testutil::disk(rng, 20.0);
    } while (dist_npi(m + 1.0) < 0.1);
    const Complex x = testutil::disk(rng, 1e-2);

    const Complex truncated = 1.0 - n * x / (m + 1.0) +
                              n * (n - 1.0) * x * x /
                                  (2.0 * (m + 1.0) * (m + 2.0));
    const Complex value = laguerre_general(n, m, x, {}, false);
    const double bound =
        5.0 * std::pow(std::abs(x), 3) *
        std::max(1.0, std::pow(std::abs(n), 3) / std::abs(m + 1.0));
    CAPTURE(i, n, m, x);
    CHECK(std::abs(value - truncated) <= bound);
  }
}

TEST_CASE("laguerre_general closed-form and prefactor pins") {
  // L_2^0(1) = 1 - 2 + 1/2.
  const Complex l2 = laguerre_general({2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0});
  CHECK(std::abs(l2 - Complex{-0.5, 0.0}) < 1e-14);

  // x = 0 with the prefactor kept isolates Gamma(n+m+1)/(Gamma(m+1)Gamma(n+1)).
  const Complex pref =
      laguerre_general({4.9, -0.3}, {-10.8, 0.0}, {0.0, 0.0});
  CHECK(std::abs(pref - kLaguerrePrefactorPin) <
        1e-12 * std::abs(kLaguerrePrefactorPin));

  // Dropping the prefactor leaves the bare series, exactly 1 at x = 0.
  const Complex norm =
      laguerre_general({4.9, -0.3}, {-10.8, 0.0}, {0.0, 0.0}, {}, false);
  CHECK(norm == Complex{1.0, 0.0});
}

TEST_CASE("laguerre_general error surface") {
  // m + 1 at a nonpositive integer degenerates the series itself.
  CHECK_THROWS_AS(laguerre_general({1.5, 0.0}, {-1.0, 0.0}, {0.3, 0.0}),
                  planewave::DegenerateOrderError);
  CHECK_THROWS_AS(laguerre_general({1.5, 0.0}, {-3.0, 1e-13}, {0.3, 0.0}),
                  planewave::DegenerateOrderError);

  // Healthy series but a gamma pole in the prefactor: error only when the
  // prefactor is requested.
  CHECK_THROWS_AS(laguerre_general({-2.0, 0.0}, {0.5, 0.0}, {0.3, 0.0}),
                  planewave::PoleError);
  CHECK_NOTHROW(laguerre_general({-2.0, 0.0}, {0.5, 0.0}, {0.3, 0.0}, {}, false));
}

TEST_CASE("series control is validated and enforced") {
  CHECK_THROWS_AS(kummer_1f1({1, 0}, {2, 0}, {1, 0}, {0.0, 100}),
                  std::invalid_argument);
  CHECK_THROWS_AS(kummer_1f1({1, 0}, {2, 0}, {1, 0}, {1e-5, 100}),
                  std::invalid_argument);
  CHECK_THROWS_AS(kummer_1f1({1, 0}, {2, 0}, {1, 0}, {1e-14, 15}),
                  std::invalid_argument);

  // A 16-term budget cannot absorb exp(60).
  CHECK_THROWS_AS(kummer_1f1({0.5, 0.0}, {1.5, 0.0}, {60.0, 0.0}, {1e-14, 16}),
                  planewave::NonConvergenceError);
  CHECK_NOTHROW(kummer_1f1({0.5, 0.0}, {1.5, 0.0}, {60.0, 0.0}));
}
