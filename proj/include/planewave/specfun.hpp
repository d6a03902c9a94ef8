#pragma once

// Complex special-function kernel: principal-branch log-gamma, the Kummer
// confluent hypergeometric function 1F1 with complex parameters, and the
// associated Laguerre function continued to complex degree and order.
//
// Everything here is a pure function of its arguments and safe to call from
// any number of threads. Results are bit-identical for identical inputs.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace planewave {

using Complex = std::complex<double>;

class SpecfunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument of a gamma-type function sits (numerically) on a pole.
class PoleError : public SpecfunError {
 public:
  using SpecfunError::SpecfunError;
};

/// The 1F1 lower parameter b is (numerically) a nonpositive integer, where
/// the series coefficients 1/(b)_j blow up.
class DegenerateOrderError : public SpecfunError {
 public:
  using SpecfunError::SpecfunError;
};

/// Series failed to satisfy the stopping rule within max_terms.
class NonConvergenceError : public SpecfunError {
 public:
  using SpecfunError::SpecfunError;
};

/// A result or intermediate left the representable range. Raised instead of
/// ever returning a NaN or infinity.
class OverflowError : public SpecfunError {
 public:
  using SpecfunError::SpecfunError;
};

/// Truncation policy for the hypergeometric series.
struct SeriesControl {
  double rel_tol = 1e-14;
  int max_terms = 10000;
};

inline void validate(const SeriesControl& ctl) {
  if (!(ctl.rel_tol > 0.0) || ctl.rel_tol > 1e-6)
    throw std::invalid_argument("SeriesControl: rel_tol must lie in (0, 1e-6]");
  if (ctl.max_terms < 16)
    throw std::invalid_argument("SeriesControl: max_terms must be >= 16");
}

namespace detail {

// Distance from z to the nearest nonpositive integer {0, -1, -2, ...}.
inline double distance_to_nonpositive_integer(Complex z) {
  const double nearest = std::min(0.0, std::round(z.real()));
  return std::abs(z - Complex(nearest, 0.0));
}

constexpr double kPoleTolerance = 1e-12;

// Neumaier-compensated accumulator, one per real component.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Lanczos approximation, g = 7, 9 coefficients. Good to ~1e-15 relative for
// Re(z) >= 0.5; combined with reflection below it covers the plane.
inline Complex log_gamma_lanczos(Complex z) {
  static constexpr double kLanczos[9] = {
      0.99999999999980993227684700473478,
      676.520368121885098567009190444019,
      -1259.13921672240287047156078755283,
      771.3234287776530788486528258894,
      -176.61502916214059906584551354,
      12.507343278686904814458936853,
      -0.13857109526572011689554707,
      9.984369578019570859563e-6,
      1.50563273514931155834e-7};
  static const double kLogSqrtTwoPi = 0.91893853320467274178032973640562;

  Complex acc(kLanczos[0], 0.0);
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + Complex(k - 1, 0.0));

  const Complex t = z + Complex(6.5, 0.0);
  return (z - 0.5) * std::log(t) - t + kLogSqrtTwoPi + std::log(acc);
}

}  // namespace detail

/// Principal branch of log Gamma(z). exp(log_gamma(x)) reproduces Gamma(x)
/// on the real axis, including the signed values between negative integers.
/// Throws PoleError when z is within 1e-12 of a nonpositive integer.
inline Complex log_gamma(Complex z) {
  if (detail::distance_to_nonpositive_integer(z) <= detail::kPoleTolerance)
    throw PoleError("log_gamma: argument at a nonpositive integer pole");

  Complex result;
  if (z.real() >= 0.5) {
    result = detail::log_gamma_lanczos(z);
  } else {
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    const Complex sin_piz = std::sin(M_PI * z);
    result = std::log(Complex(M_PI, 0.0)) - std::log(sin_piz) -
             detail::log_gamma_lanczos(1.0 - z);
  }
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
    throw OverflowError("log_gamma: result not representable");
  return result;
}

/// Kummer confluent hypergeometric function
///
///   1F1(a; b; z) = sum_{j>=0} (a)_j / (b)_j * z^j / j!
///
/// summed directly with compensated accumulation. Terms are added until the
/// running term magnitude stays below rel_tol * |partial sum| for two
/// consecutive terms. The series is entire in z, so this converges for any
/// finite argument; the intended operating range here is |z| of order one.
inline Complex kummer_1f1(Complex a, Complex b, Complex z,
                          const SeriesControl& ctl = {}) {
  validate(ctl);
  if (detail::distance_to_nonpositive_integer(b) <= detail::kPoleTolerance)
    throw DegenerateOrderError(
        "kummer_1f1: b is a nonpositive integer, series undefined");

  detail::CompensatedSum re_acc, im_acc;
  Complex term(1.0, 0.0);
  int consecutive_small = 0;

  for (int j = 0; j < ctl.max_terms; ++j) {
    re_acc.add(term.real());
    im_acc.add(term.imag());

    const Complex partial(re_acc.value(), im_acc.value());
    if (std::abs(term) <= ctl.rel_tol * std::abs(partial)) {
      if (++consecutive_small == 2) return partial;
    } else {
      consecutive_small = 0;
    }

    term *= (a + Complex(j, 0.0)) * z /
            ((b + Complex(j, 0.0)) * Complex(j + 1, 0.0));
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
      throw OverflowError("kummer_1f1: series term overflowed");
  }
  throw NonConvergenceError("kummer_1f1: no convergence within max_terms");
}

///// Associated Laguerre function for complex degree n, order m and argument x:
///
///   L_n^m(x) = Gamma(n+m+1) / (Gamma(m+1) Gamma(n+1)) * 1F1(-n; m+1; x)
///
/// The gamma prefactor is formed in log space and exponentiated once. With
/// keep_prefactor = false the bare 1F1(-n; m+1; x) is returned instead; that
/// normalized form is what the wavefunction evaluator uses by default.
inline Complex laguerre_general(Complex n, Complex m, Complex x,
                                const SeriesControl& ctl = {},
                                bool keep_prefactor = true) {
  const Complex series = kummer_1f1(-n, m + 1.0, x, ctl);
  if (!keep_prefactor) return series;

  const Complex log_pref =
      log_gamma(n + m + 1.0) - log_gamma(m + 1.0) - log_gamma(n + 1.0);
  const Complex value = std::exp(log_pref) * series;
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw OverflowError("laguerre_general: prefactor overflowed");
  return value;
}

}  // namespace planewave
