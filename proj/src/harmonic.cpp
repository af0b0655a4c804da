#include "harmlab/harmonic.hpp"

#include <cmath>
#include <cstdio>

#include "harmlab/errors.hpp"

namespace harmlab {

Cx map_value(const HarmonicMap& f, Cx z) {
  return f.h.eval(z) + std::conj(f.g.eval(z)) + f.c;
}

double jacobian(const HarmonicMap& f, Cx z) {
  const Cx hp = f.h.eval_jet(z, 1).derivative(1);
  const Cx gp = f.g.eval_jet(z, 1).derivative(1);
  return abs2(hp) - abs2(gp);
}

Jet omega_jet(const HarmonicMap& f, Cx z, int order) {
  const Jet hp = jet_derivative(f.h.eval_jet(z, order + 1));
  const Jet gp = jet_derivative(f.g.eval_jet(z, order + 1));
  if (std::abs(hp.value()) <= kEpsDiv)
    raise(Errc::division_near_zero,
          "h' vanishes at " + format_cx(z) + "; dilatation undefined");
  return gp * recip(hp);
}

Cx dilatation(const HarmonicMap& f, Cx z) { return omega_jet(f, z, 0).value(); }

PowerSeries omega_series(const HarmonicMap& f, int order) {
  const double r = f.eval_radius();
  PowerSeries hp = to_series(f.h, order + 1, r).derivative();
  PowerSeries gp = to_series(f.g, order + 1, r).derivative();
  return gp / hp;
}

CheckReport is_sense_preserving(const HarmonicMap& f, const GridSpec& grid) {
  CheckReport report;
  report.suite_name = "sense_preserving";
  ResidualMax worst_j;
  ResidualMax worst_omega;
  double min_j = 0.0;
  double max_abs_omega = 0.0;
  bool first = true;
  bool omega_defined = true;
  std::string omega_failure;
  for (const Cx& z : grid.points()) {
    const double j = jacobian(f, z);
    double aw = 0.0;
    if (omega_defined) {
      try {
        aw = std::abs(dilatation(f, z));
      } catch (const Error& e) {
        omega_defined = false;
        omega_failure = e.what();
      }
    }
    if (first) {
      min_j = j;
      max_abs_omega = aw;
      first = false;
    } else {
      if (j < min_j) min_j = j;
      if (aw > max_abs_omega) max_abs_omega = aw;
    }
    worst_j.update(-j, z);
    worst_omega.update(omega_defined ? aw - 1.0 : 1.0, z);
  }

  char note[96];
  std::snprintf(note, sizeof(note), "min J = %.17g", min_j);
  report.add(make_check("jacobian_positive", grid.summary(), 0.0, worst_j, 0.0, note));
  if (omega_defined) {
    std::snprintf(note, sizeof(note), "max |omega| = %.17g", max_abs_omega);
    report.add(make_check("dilatation_bounded", grid.summary(), 0.0, worst_omega, 0.0, note));
  } else {
    report.add(make_check("dilatation_bounded", grid.summary(), 0.0, worst_omega, 0.0,
                          omega_failure));
  }

  // The two Levy criteria must agree on every grid.
  const bool by_j = min_j > 0.0;
  const bool by_omega = omega_defined && max_abs_omega < 1.0;
  ResidualMax agree;
  agree.update(by_j == by_omega ? 0.0 : 1.0, Cx(0.0));
  report.add(make_check("levy_agreement", grid.summary(), 0.0, agree, 0.0,
                        by_j == by_omega ? "criteria agree" : "criteria disagree"));
  return report;
}

MapType classify_type(const HarmonicMap& f, const GridSpec& grid, double tol_const) {
  double max_omega_prime = 0.0;
  for (const Cx& z : grid.points()) {
    const Cx wp = omega_jet(f, z, 1).derivative(1);
    if (std::abs(wp) > max_omega_prime) max_omega_prime = std::abs(wp);
  }
  return max_omega_prime <= tol_const ? MapType::kType1 : MapType::kType2;
}

Cx wirtinger_fd(const ScalarField& u, Cx z, double step, Wirtinger which) {
  if (!(step > 0.0)) raise(Errc::invalid_parameter, "FD step must be positive");
  if (std::abs(z) + 2.0 * step > u.domain_radius)
    raise(Errc::radius_exceeded, "FD stencil at " + format_cx(z) +
                                     " leaves the sampling domain");
  const double up = u.sample(z + Cx(step, 0.0));
  const double um = u.sample(z - Cx(step, 0.0));
  const double vp = u.sample(z + Cx(0.0, step));
  const double vm = u.sample(z - Cx(0.0, step));
  switch (which) {
    case Wirtinger::kDz: {
      const double ux = (up - um) / (2.0 * step);
      const double uy = (vp - vm) / (2.0 * step);
      return 0.5 * Cx(ux, -uy);
    }
    case Wirtinger::kDzbar: {
      const double ux = (up - um) / (2.0 * step);
      const double uy = (vp - vm) / (2.0 * step);
      return 0.5 * Cx(ux, uy);
    }
    case Wirtinger::kDzzbar: {
      const double u0 = u.sample(z);
      return Cx((up + um + vp + vm - 4.0 * u0) / (4.0 * step * step), 0.0);
    }
  }
  raise(Errc::invalid_parameter, "unknown Wirtinger operator");
}

ScalarField ln_jacobian_field(const HarmonicMap& f) {
  ScalarField field;
  field.domain_radius = f.eval_radius();
  field.sample = [f](Cx z) {
    const double j = jacobian(f, z);
    if (!(j > 0.0))
      raise(Errc::sense_reversed,
            "Jacobian not positive at " + format_cx(z) + "; ln J undefined");
    return std::log(j);
  };
  return field;
}

namespace {

// |omega'|^2 / (1 - |omega|^2)^2 from an order-1 dilatation jet.
double pde_rhs(const Jet& w) {
  const double denom = 1.0 - abs2(w.value());
  return abs2(w.derivative(1)) / (denom * denom);
}

}  // namespace

CheckReport verify_jacobian_pde(const HarmonicMap& f, const GridSpec& grid,
                                double step, double tol) {
  const ScalarField lnj = ln_jacobian_field(f);
  ResidualMax rm;
  for (const Cx& z : grid.points()) {
    const double lhs = -wirtinger_fd(lnj, z, step, Wirtinger::kDzzbar).real();
    const double rhs = pde_rhs(omega_jet(f, z, 1));
    rm.update(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)), z);
  }
  CheckReport report;
  report.suite_name = "jacobian_pde";
  report.add(make_check("jacobian_pde_fd", grid.summary(), step, rm, tol,
                        "-(ln J)_{z zbar} vs |omega'|^2(1-|omega|^2)^-2"));
  return report;
}

CheckReport verify_jacobian_pde_analytic(const HarmonicMap& f,
                                         const GridSpec& grid, double tol) {
  ResidualMax rm;
  for (const Cx& z : grid.points()) {
    const Jet w = omega_jet(f, z, 1);
    const double aw2 = abs2(w.value());
    const double awp2 = abs2(w.derivative(1));
    const double denom = 1.0 - aw2;
    // -(ln(1-|omega|^2))_{z zbar}, left in its two-term form; the harmonic
    // ln|h'|^2 part of ln J differentiates to zero identically.
    const double lhs = awp2 / denom + awp2 * aw2 / (denom * denom);
    const double rhs = pde_rhs(w);
    rm.update(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)), z);
  }
  CheckReport report;
  report.suite_name = "jacobian_pde_analytic";
  report.add(make_check("jacobian_pde_analytic", grid.summary(), 0.0, rm, tol,
                        "factorized ln J = ln|h'|^2 + ln(1-|omega|^2)"));
  return report;
}

namespace {

ScalarField r_field(const HarmonicMap& f) {
  ScalarField field;
  field.domain_radius = f.eval_radius();
  field.sample = [f](Cx z) {
    const double j = jacobian(f, z);
    const Jet w = omega_jet(f, z, 1);
    const Cx wp = w.derivative(1);
    if (std::abs(wp) <= kEpsDiv)
      raise(Errc::degenerate_at_point,
            "omega' vanishes at " + format_cx(z) + " (point of Z not excluded)");
    const double denom = 1.0 - abs2(w.value());
    return std::log(j * j * abs2(wp) / (denom * denom));
  };
  return field;
}

CheckReport laplacian_check(const ScalarField& u, const char* name, const GridSpec& grid,
                            double step, double tol, const std::string& note) {
  ResidualMax rm;
  for (const Cx& z : grid.points()) {
    const double lap = 4.0 * wirtinger_fd(u, z, step, Wirtinger::kDzzbar).real();
    rm.update(std::abs(lap), z);
  }
  CheckReport report;
  report.suite_name = name;
  report.add(make_check(name, grid.summary(), step, rm, tol, note));
  return report;
}

}  // namespace

CheckReport verify_R_harmonic(const HarmonicMap& f, const GridSpec& grid, double step,
                              double tol) {
  return laplacian_check(r_field(f), "R_harmonic", grid, step, tol,
                         "FD Laplacian of R = ln(J^2 |omega'|^2 (1-|omega|^2)^-2)");
}

CheckReport verify_lnJ_harmonic(const HarmonicMap& f, const GridSpec& grid, double step,
                                double tol) {
  return laplacian_check(ln_jacobian_field(f), "lnJ_harmonic", grid, step, tol,
                         "FD Laplacian of ln J (type-1 Jacobian)");
}

}  // namespace harmlab
