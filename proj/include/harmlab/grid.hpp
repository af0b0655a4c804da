#pragma once

#include <string>
#include <vector>

#include "harmlab/cx.hpp"

namespace harmlab {

// Polar sample grid on the disk: n_radial rings, n_angular points per ring,
// enumerated ring-by-ring from the innermost radius. Points closer than
// exclusion_radius to any exclusion center are dropped.
struct GridSpec {
  double r_max = 0.7;
  int n_radial = 21;
  int n_angular = 48;
  std::vector<Cx> exclusion_centers;
  double exclusion_radius = 0.0;

  void validate() const;
  std::vector<Cx> points() const;
  std::string summary() const;
};

}  // namespace harmlab
