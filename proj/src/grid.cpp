#include "harmlab/grid.hpp"

#include <cstdio>

#include "harmlab/errors.hpp"

namespace harmlab {

void GridSpec::validate() const {
  if (!(r_max > 0.0 && r_max < 1.0))
    raise(Errc::invalid_parameter, "grid r_max must lie in (0, 1)");
  if (n_radial < 2) raise(Errc::invalid_parameter, "grid needs n_radial >= 2");
  if (n_angular < 4) raise(Errc::invalid_parameter, "grid needs n_angular >= 4");
  if (n_radial * n_angular < 8)
    raise(Errc::invalid_parameter, "degenerate grid: fewer than 8 points");
  if (exclusion_radius < 0.0)
    raise(Errc::invalid_parameter, "exclusion radius must be >= 0");
}

std::vector<Cx> GridSpec::points() const {
  validate();
  std::vector<Cx> pts;
  pts.reserve(static_cast<size_t>(n_radial) * static_cast<size_t>(n_angular));
  const double two_pi = 6.283185307179586476925286766559;
  for (int ir = 0; ir < n_radial; ++ir) {
    const double r = r_max * static_cast<double>(ir + 1) / static_cast<double>(n_radial);
    for (int ia = 0; ia < n_angular; ++ia) {
      const double theta = two_pi * static_cast<double>(ia) / static_cast<double>(n_angular);
      const Cx z = r * unit_phase(theta);
      bool excluded = false;
      for (const Cx& c : exclusion_centers) {
        if (std::abs(z - c) < exclusion_radius) {
          excluded = true;
          break;
        }
      }
      if (!excluded) pts.push_back(z);
    }
  }
  return pts;
}

std::string GridSpec::summary() const {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "polar r<=%g nr=%d na=%d excl=%zu@%g", r_max,
                n_radial, n_angular, exclusion_centers.size(), exclusion_radius);
  return buf;
}

}  // namespace harmlab
