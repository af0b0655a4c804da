#pragma once

#include <string>
#include <vector>

#include "harmlab/cx.hpp"

namespace harmlab {

// One verified identity: the maximum residual seen over a sweep, the grid
// point where it occurred, and the pass threshold. pass <=> residual <= tol.
struct CheckResult {
  std::string name;
  std::string grid;
  double step = 0.0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  Cx worst_point{0.0, 0.0};
  bool pass = false;
  std::string note;
};

struct CheckReport {
  std::string suite_name;
  std::vector<CheckResult> checks;

  CheckResult& add(CheckResult r) {
    checks.push_back(std::move(r));
    return checks.back();
  }

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

// Running max-residual accumulator with deterministic worst-point
// tie-breaking (smallest (x, y) lexicographically).
struct ResidualMax {
  double value = 0.0;
  Cx where{0.0, 0.0};
  bool seen = false;

  void update(double residual, Cx z) {
    if (!seen || residual > value || (residual == value && lex_less(z, where))) {
      value = residual;
      where = z;
      seen = true;
    }
  }
};

CheckResult make_check(const std::string& name, const std::string& grid, double step,
                       const ResidualMax& rm, double tolerance,
                       const std::string& note = "");

// Serialization to the versioned JSON report ("harmlab-report/1"); the
// timestamp is the only non-deterministic field.
std::string report_to_json(const CheckReport& report, bool with_timestamp = true);
void write_report_json(const CheckReport& report, const std::string& path);

std::string format_cx(Cx v);

}  // namespace harmlab
