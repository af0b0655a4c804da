#pragma once

#include <vector>

#include "harmlab/analytic.hpp"
#include "harmlab/harmonic.hpp"
#include "harmlab/mobius.hpp"

namespace harmlab {

// S[f] = f'''/f' - (3/2)(f''/f')^2, from an order-3 jet.
Cx schwarzian_jet(const Jet& j);
Cx schwarzian(const AnalyticFunction& fn, Cx z);

// Schwarzian of M o fn at z; equals schwarzian(fn, z) by the Mobius
// invariance property.
Cx schwarzian_mobius_composed(const Mobius& m, const AnalyticFunction& fn, Cx z);

// Q = 2 P_zz - P_z^2 with P = ln(-(ln J)_{z zbar}) expressed through omega;
// the conjugate-bearing terms cancel, so the value equals 2 S[omega].
Cx compute_Q_analytic_jet(const Jet& omega);
Cx compute_Q_analytic(const AnalyticFunction& omega, Cx z);

// Same Q from Jacobian samples alone: an inner 5-point Laplacian of ln J
// feeds u = ln(-(ln J)_{z zbar}), differentiated on an outer stencil.
Cx compute_Q_blackbox(const ScalarField& jacobian_field, Cx z,
                      double inner_step = 1e-3, double outer_step = 1e-2);

// S[fn] as a power series at 0 (fn'(0) must not vanish).
PowerSeries schwarzian_series(const PowerSeries& fn);

// 2 S[omega] for the reconstruction pipeline.
PowerSeries q_series_from_omega(const PowerSeries& omega);

// Solves w'' + (Q/4) w = 0 for the two normalized bases and returns
// omega_rec = w1/w2 with omega_rec(0) = 0, omega_rec'(0) = 1, so that
// 2 S[omega_rec] = Q. Any other solution differs by a Mobius map.
PowerSeries solve_schwarzian_series(const PowerSeries& q_series, int order);

// Probe layout used by the fitting stages: 8 points on |z| = 0.4, first
// three for the fit, the rest for validation.
std::vector<Cx> default_fit_probes();

}  // namespace harmlab
