#include "harmlab/schwarzian.hpp"

#include <cmath>

#include "harmlab/errors.hpp"
#include "harmlab/report.hpp"

namespace harmlab {

Cx schwarzian_jet(const Jet& j) {
  if (j.order() < 3)
    raise(Errc::invalid_parameter, "Schwarzian needs an order-3 jet");
  const Cx f1 = j.derivative(1);
  const Cx f2 = j.derivative(2);
  const Cx f3 = j.derivative(3);
  if (std::abs(f1) <= kEpsDiv)
    raise(Errc::division_near_zero,
          "f' vanishes; Schwarzian undefined at a critical point");
  const Cx ratio = f2 / f1;
  return f3 / f1 - 1.5 * ratio * ratio;
}

Cx schwarzian(const AnalyticFunction& fn, Cx z) {
  return schwarzian_jet(fn.eval_jet(z, 3));
}

Cx schwarzian_mobius_composed(const Mobius& m, const AnalyticFunction& fn, Cx z) {
  return schwarzian_jet(mobius_apply_jet(m, fn.eval_jet(z, 3)));
}

Cx compute_Q_analytic_jet(const Jet& omega) {
  if (omega.order() < 3)
    raise(Errc::invalid_parameter, "Q needs an order-3 dilatation jet");
  const Cx w = omega.value();
  const Cx w1 = omega.derivative(1);
  const Cx w2 = omega.derivative(2);
  const Cx w3 = omega.derivative(3);
  if (std::abs(w1) <= kEpsDiv)
    raise(Errc::degenerate_at_point,
          "omega' vanishes (point of Z); Q undefined");
  if (abs2(w) >= 1.0)
    raise(Errc::invalid_parameter, "|omega| >= 1; not a dilatation value");
  const Cx wbar = std::conj(w);
  const double denom = 1.0 - abs2(w);
  // P = ln(-(ln J)_{z zbar}) = ln|omega'|^2 - 2 ln(1-|omega|^2), kept with its
  // conjugate-bearing terms; they cancel out of 2 P_zz - P_z^2.
  const Cx p_z = w2 / w1 + 2.0 * wbar * w1 / denom;
  const Cx p_zz = (w3 * w1 - w2 * w2) / (w1 * w1) + 2.0 * wbar * w2 / denom +
                  2.0 * wbar * wbar * w1 * w1 / (denom * denom);
  return 2.0 * p_zz - p_z * p_z;
}

Cx compute_Q_analytic(const AnalyticFunction& omega, Cx z) {
  return compute_Q_analytic_jet(omega.eval_jet(z, 3));
}

Cx compute_Q_blackbox(const ScalarField& jacobian_field, Cx z, double inner_step,
                      double outer_step) {
  if (!(inner_step > 0.0) || !(outer_step > 0.0))
    raise(Errc::invalid_parameter, "FD steps must be positive");
  if (outer_step < 5.0 * inner_step)
    raise(Errc::invalid_parameter,
          "outer step must be at least 5x the inner step");
  if (std::abs(z) + 2.0 * (inner_step + outer_step) > jacobian_field.domain_radius)
    raise(Errc::radius_exceeded,
          "black-box Q stencil at " + format_cx(z) + " leaves the domain");

  ScalarField lnj;
  lnj.domain_radius = jacobian_field.domain_radius;
  lnj.sample = [&jacobian_field](Cx w) {
    const double j = jacobian_field.sample(w);
    if (!(j > 0.0))
      raise(Errc::sense_reversed,
            "sampled Jacobian not positive at " + format_cx(w));
    return std::log(j);
  };

  auto u = [&](Cx w) {
    const double inner = -wirtinger_fd(lnj, w, inner_step, Wirtinger::kDzzbar).real();
    if (!(inner > 0.0))
      raise(Errc::negative_inner_value,
            "-(ln J)_{z zbar} = " + std::to_string(inner) + " at " + format_cx(w) +
                "; type-1 region or noise");
    return std::log(inner);
  };

  const double s = outer_step;
  const double u0 = u(z);
  const double uxp = u(z + Cx(s, 0.0));
  const double uxm = u(z - Cx(s, 0.0));
  const double uyp = u(z + Cx(0.0, s));
  const double uym = u(z - Cx(0.0, s));
  const double upp = u(z + Cx(s, s));
  const double upm = u(z + Cx(s, -s));
  const double ump = u(z + Cx(-s, s));
  const double umm = u(z + Cx(-s, -s));

  const double ux = (uxp - uxm) / (2.0 * s);
  const double uy = (uyp - uym) / (2.0 * s);
  const double uxx = (uxp - 2.0 * u0 + uxm) / (s * s);
  const double uyy = (uyp - 2.0 * u0 + uym) / (s * s);
  const double uxy = (upp - upm - ump + umm) / (4.0 * s * s);

  const Cx u_z = 0.5 * Cx(ux, -uy);
  const Cx u_zz = 0.25 * Cx(uxx - uyy, -2.0 * uxy);
  return 2.0 * u_zz - u_z * u_z;
}

PowerSeries schwarzian_series(const PowerSeries& fn) {
  if (fn.trunc_order() < 4)
    raise(Errc::invalid_parameter, "Schwarzian series needs order >= 4");
  const PowerSeries f1 = fn.derivative();
  const PowerSeries f2 = f1.derivative();
  const PowerSeries f3 = f2.derivative();
  const PowerSeries inv = recip(f1.truncated(f3.trunc_order()));
  const PowerSeries ratio = f2.truncated(f3.trunc_order()) * inv;
  return f3 * inv - Cx(1.5) * (ratio * ratio);
}

PowerSeries q_series_from_omega(const PowerSeries& omega) {
  return Cx(2.0) * schwarzian_series(omega);
}

PowerSeries solve_schwarzian_series(const PowerSeries& q_series, int order) {
  if (order < 1) raise(Errc::invalid_parameter, "reconstruction order must be >= 1");
  const size_t n = static_cast<size_t>(order) + 1;
  std::vector<Cx> w1(n, Cx(0.0));
  std::vector<Cx> w2(n, Cx(0.0));
  w1[0] = Cx(0.0);
  if (n > 1) w1[1] = Cx(1.0);
  w2[0] = Cx(1.0);

  // (n+2)(n+1) w_{n+2} = -sum_{k<=n} q_k w_{n-k} / 4.
  auto advance = [&](std::vector<Cx>& w) {
    for (int m = 0; m + 2 <= order; ++m) {
      Cx acc(0.0);
      for (int k = 0; k <= m; ++k)
        acc += q_series.coeff(k) * w[static_cast<size_t>(m - k)];
      w[static_cast<size_t>(m + 2)] =
          -acc / (4.0 * static_cast<double>(m + 2) * static_cast<double>(m + 1));
    }
  };
  advance(w1);
  advance(w2);

  const PowerSeries s1(std::move(w1), q_series.r_max());
  const PowerSeries s2(std::move(w2), q_series.r_max());
  return s1 / s2;
}

std::vector<Cx> default_fit_probes() {
  std::vector<Cx> probes;
  probes.reserve(8);
  const double two_pi = 6.283185307179586476925286766559;
  for (int k = 0; k < 8; ++k) probes.push_back(0.4 * unit_phase(two_pi * k / 8.0));
  return probes;
}

}  // namespace harmlab
