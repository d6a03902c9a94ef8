#pragma once

// Regular spacetime grids and the deterministic parallel wavefunction
// evaluator behind the eval CLI subcommand. Points are indexed row-major
// with xi slowest and tau fastest; workers split the flat index range into
// contiguous chunks and format their rows independently, so output bytes do
// not depend on the worker count.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "planewave/format.hpp"
#include "planewave/model.hpp"
#include "planewave/perturbation.hpp"
#include "planewave/solution.hpp"

namespace planewave {

class InvalidGrid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation failed at one grid point; `cause` holds the underlying error.
class EvalPointError : public std::runtime_error {
 public:
  EvalPointError(std::string message, std::size_t flat_index,
                 std::exception_ptr cause)
      : std::runtime_error(std::move(message)),
        flat_index(flat_index),
        cause(std::move(cause)) {}

  std::size_t flat_index;
  std::exception_ptr cause;
};

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;

  double at(std::size_t i) const {
    if (count == 1) return min;
    return min + (max - min) * static_cast<double>(i) /
                     static_cast<double>(count - 1);
  }
};

struct GridSpec {
  AxisSpec xi, upsilon, zeta, tau;

  static constexpr std::size_t kMaxPoints = 100000000;  // 1e8 guard

  std::size_t total() const {
    return xi.count * upsilon.count * zeta.count * tau.count;
  }

  SpacetimePoint point(std::size_t flat) const {
    const std::size_t i_tau = flat % tau.count;
    flat /= tau.count;
    const std::size_t i_zeta = flat % zeta.count;
    flat /= zeta.count;
    const std::size_t i_ups = flat % upsilon.count;
    flat /= upsilon.count;
    return SpacetimePoint{xi.at(flat), upsilon.at(i_ups), zeta.at(i_zeta),
                          tau.at(i_tau)};
  }
};

inline void validate(const GridSpec& g) {
  for (const AxisSpec* axis : {&g.xi, &g.upsilon, &g.zeta, &g.tau}) {
    if (axis->count < 1) throw InvalidGrid("grid: axis count must be >= 1");
    if (!(axis->min <= axis->max))
      throw InvalidGrid("grid: axis min must be <= max");
    if (!std::isfinite(axis->min) || !std::isfinite(axis->max))
      throw InvalidGrid("grid: axis bounds must be finite");
  }
  // Overflow-safe product check against the point guard.
  std::size_t total = 1;
  for (const AxisSpec* axis : {&g.xi, &g.upsilon, &g.zeta, &g.tau}) {
    if (axis->count > GridSpec::kMaxPoints / total)
      throw InvalidGrid("grid too large: more than 1e8 points");
    total *= axis->count;
  }
}

/// Parse "min:max:count,min:max:count,min:max:count,min:max:count" (axes
/// xi, upsilon, zeta, tau).
inline GridSpec parse_grid_spec(std::string_view text) {
  std::vector<AxisSpec> axes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    const std::size_t c1 = field.find(':');
    const std::size_t c2 = c1 == std::string_view::npos
                               ? std::string_view::npos
                               : field.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
      throw InvalidGrid("grid: each axis needs min:max:count");
    try {
      AxisSpec axis;
      axis.min = std::stod(std::string(field.substr(0, c1)));
      axis.max = std::stod(std::string(field.substr(c1 + 1, c2 - c1 - 1)));
      const long long count = std::stoll(std::string(field.substr(c2 + 1)));
      if (count < 1) throw InvalidGrid("grid: axis count must be >= 1");
      axis.count = static_cast<std::size_t>(count);
      axes.push_back(axis);
    } catch (const InvalidGrid&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidGrid("grid: malformed axis spec");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (axes.size() != 4)
    throw InvalidGrid("grid: expected 4 comma-separated axes");
  GridSpec g{axes[0], axes[1], axes[2], axes[3]};
  validate(g);
  return g;
}

/// What to evaluate on the grid: the exact solution (normalized or raw) or
/// the perturbative expansion at a given order.
struct EvalRequest {
  DimensionlessParams params;
  GridSpec grid;
  SeriesControl ctl;
  bool normalized = true;
  std::optional<int> perturbative_order;
  unsigned workers = 1;
};

namespace detail {

inline void format_eval_row(std::string& out, const SpacetimePoint& p,
                            Complex value) {
  append_double(out, p.xi);
  out.push_back(',');
  append_double(out, p.upsilon);
  out.push_back(',');
  append_double(out, p.zeta);
  out.push_back(',');
  append_double(out, p.tau);
  out.push_back(',');
  append_double(out, value.real());
  out.push_back(',');
  append_double(out, value.imag());
  out.push_back(',');
  append_double(out, std::abs(value));
  out.push_back(',');
  append_double(out, std::arg(value));
  out.push_back('\n');
}

}  // namespace detail

/// Evaluate the requested wavefunction over the grid and stream CSV rows
/// (header `xi,upsilon,zeta,tau,re_psi,im_psi,abs_psi,phase`). Deterministic:
/// the same request yields identical bytes for any worker count.
inline void eval_grid_csv(std::ostream& os, const EvalRequest& req) {
  validate(req.params);
  validate(req.grid);
  validate(req.ctl);
  if (req.perturbative_order &&
      (*req.perturbative_order < 0 || *req.perturbative_order > 2))
    throw std::invalid_argument("eval: perturbative order must be 0, 1 or 2");

  const std::size_t total = req.grid.total();
  const auto evaluate = [&](const SpacetimePoint& p) {
    if (req.perturbative_order)
      return psi_perturbative(p, req.params, *req.perturbative_order);
    return psi_hat_exact(p, req.params, req.ctl, req.normalized);
  };

  const unsigned workers =
      std::max(1u, std::min(req.workers, static_cast<unsigned>(256)));
  const std::size_t chunk = (total + workers - 1) / workers;

  std::vector<std::string> buffers(workers);
  std::vector<std::size_t> failed_index(workers, SIZE_MAX);
  std::vector<std::exception_ptr> failures(workers);

  const auto run_chunk = [&](unsigned w) {
    const std::size_t begin = static_cast<std::size_t>(w) * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    std::string& out = buffers[w];
    for (std::size_t i = begin; i < end; ++i) {
      const SpacetimePoint p = req.grid.point(i);
      try {
        detail::format_eval_row(out, p, evaluate(p));
      } catch (...) {
        failed_index[w] = i;
        failures[w] = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run_chunk, w);
    for (std::thread& t : pool) t.join();
  }

  for (unsigned w = 0; w < workers; ++w) {
    if (failures[w]) {
      const SpacetimePoint p = req.grid.point(failed_index[w]);
      std::string msg = "evaluation failed at grid point ";
      msg += std::to_string(failed_index[w]);
      msg += " (xi=" + format_double(p.xi) + ", upsilon=" +
             format_double(p.upsilon) + ", zeta=" + format_double(p.zeta) +
             ", tau=" + format_double(p.tau) + ")";
      throw EvalPointError(msg, failed_index[w], failures[w]);
    }
  }

  os << "xi,upsilon,zeta,tau,re_psi,im_psi,abs_psi,phase\n";
  for (const std::string& buf : buffers) os << buf;
}

}  // namespace planewave
