#pragma once

#include <functional>

#include "harmlab/analytic.hpp"
#include "harmlab/grid.hpp"
#include "harmlab/report.hpp"

namespace harmlab {

// Planar harmonic mapping f = h + conj(g) + c with h, g holomorphic.
struct HarmonicMap {
  AnalyticFunction h;
  AnalyticFunction g;
  Cx c{0.0, 0.0};

  double eval_radius() const {
    return h.eval_radius() < g.eval_radius() ? h.eval_radius() : g.eval_radius();
  }
};

Cx map_value(const HarmonicMap& f, Cx z);

// J = |h'|^2 - |g'|^2.
double jacobian(const HarmonicMap& f, Cx z);

// Jet of the analytic dilatation omega = g'/h' at z (exact via jets).
Jet omega_jet(const HarmonicMap& f, Cx z, int order);

Cx dilatation(const HarmonicMap& f, Cx z);

// Taylor series of omega at 0 through the series quotient g'/h'.
PowerSeries omega_series(const HarmonicMap& f, int order = kDefaultSeriesOrder);

// Levy criterion, both forms: min J > 0 and max |omega| < 1, with an
// agreement check between the two.
CheckReport is_sense_preserving(const HarmonicMap& f, const GridSpec& grid);

enum class MapType { kType1, kType2 };

inline constexpr double kTolConstOmega = 1e-10;

// Type 1 <=> omega constant on the grid (max |omega'| <= tol).
MapType classify_type(const HarmonicMap& f, const GridSpec& grid,
                      double tol_const = kTolConstOmega);

// Real scalar field on a disk, for black-box finite differencing.
struct ScalarField {
  std::function<double(Cx)> sample;
  double domain_radius = 0.95;
};

enum class Wirtinger { kDz, kDzbar, kDzzbar };

// Central finite differences: Dz = (u_x - i u_y)/2, Dzbar = (u_x + i u_y)/2,
// Dzzbar = (u_xx + u_yy)/4 through the 5-point Laplacian stencil.
Cx wirtinger_fd(const ScalarField& u, Cx z, double step, Wirtinger which);

ScalarField ln_jacobian_field(const HarmonicMap& f);

inline constexpr double kDefaultFdStep = 1e-3;

// (-ln J)_{z zbar} = |omega'|^2 (1 - |omega|^2)^{-2}, finite differences on
// the left against jet evaluation on the right; relative residual
// |LHS-RHS|/(1+|RHS|).
CheckReport verify_jacobian_pde(const HarmonicMap& f, const GridSpec& grid,
                                double step = kDefaultFdStep, double tol = 1e-4);

// Same identity with the left side evaluated through the factorization
// ln J = ln|h'|^2 + ln(1 - |omega|^2); residual is pure round-off.
CheckReport verify_jacobian_pde_analytic(const HarmonicMap& f,
                                         const GridSpec& grid, double tol = 1e-10);

// R = ln(J^2 |omega'|^2 (1-|omega|^2)^{-2}) evaluated analytically, then
// checked for harmonicity with a finite-difference Laplacian.
CheckReport verify_R_harmonic(const HarmonicMap& f, const GridSpec& grid,
                              double step = kDefaultFdStep, double tol = 1e-4);

// Type-1 counterpart: ln J itself is harmonic.
CheckReport verify_lnJ_harmonic(const HarmonicMap& f, const GridSpec& grid,
                                double step = kDefaultFdStep, double tol = 1e-4);

}  // namespace harmlab
