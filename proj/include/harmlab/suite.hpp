#pragma once

#include <cstdint>
#include <string>

#include "harmlab/family.hpp"
#include "harmlab/harmonic.hpp"

namespace harmlab {

// Configuration for the verification suites; defaults follow the CLI flags.
struct SuiteConfig {
  std::string catalog_name;  // one of catalog_name / map_spec must be set
  std::string map_spec;      // "<h-expr>;<g-expr>"

  GridSpec grid;
  double fd_step = 1e-3;
  double tol_fd = 1e-4;
  double tol_analytic = 1e-10;
  std::uint64_t seed = 42;
  int n_params = 20;
  int series_order = kDefaultSeriesOrder;

  bool blackbox = false;  // reconstruct: also probe Q from J samples
  double inner_step = 1e-3;
  double outer_step = 1e-2;
  double tol_blackbox = 2e-2;  // relative, with the same absolute floor

  void validate() const;
};

struct ResolvedMap {
  HarmonicMap map;
  std::string name;
};

// Catalog name or "h;g" expression pair; wraps parse failures as ConfigError.
ResolvedMap resolve_map(const SuiteConfig& cfg);

// Runs every verification applicable to the map's Jacobian type. The
// sense-preserving gate aborts the suite when it fails; domain errors inside
// individual checks become failed checks with reason notes.
CheckReport run_check_suite(const SuiteConfig& cfg);

// Q -> series solution -> Mobius identification of omega -> automorphism
// structure of the equal-Jacobian dilatation family, plus the optional
// black-box Q probes.
CheckReport reconstruct_command(const SuiteConfig& cfg);

// CSV columns: x,y,re_f,im_f,jacobian,re_omega,im_omega in grid enumeration
// order, full double precision.
void emit_grid_csv(const HarmonicMap& f, const GridSpec& grid, const std::string& path);

}  // namespace harmlab
