#pragma once

// Shortest round-trip decimal formatting for binary64 values, used by every
// CSV writer so outputs are byte-identical across runs and worker counts.

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include "planewave/verify.hpp"

namespace planewave {

inline void append_double(std::string& out, double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, res.ptr);
}

inline std::string format_double(double value) {
  std::string out;
  append_double(out, value);
  return out;
}

/// residual_convergence rows as `h,residual` plus a trailing fitted-order
/// comment line.
inline void write_convergence_csv(std::ostream& os,
                                  const ResidualReport& report) {
  std::string out = "h,residual\n";
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    append_double(out, report.steps[i]);
    out.push_back(',');
    append_double(out, report.residuals[i]);
    out.push_back('\n');
  }
  out += "# fitted_order=";
  append_double(out, report.fitted_order);
  out.push_back('\n');
  os << out;
}

/// compare_report rows as `a,max_abs_dev,ratio`; the first row has no ratio.
inline void write_compare_csv(std::ostream& os,
                              const std::vector<CompareRow>& table) {
  std::string out = "a,max_abs_dev,ratio\n";
  for (const CompareRow& row : table) {
    append_double(out, row.a);
    out.push_back(',');
    append_double(out, row.max_abs_deviation);
    out.push_back(',');
    if (row.ratio_to_previous) append_double(out, *row.ratio_to_previous);
    out.push_back('\n');
  }
  os << out;
}

}  // namespace planewave
