#include "harmlab/suite.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "harmlab/catalog.hpp"
#include "harmlab/errors.hpp"
#include "harmlab/schwarzian.hpp"

namespace harmlab {

void SuiteConfig::validate() const {
  grid.validate();
  if (!(fd_step > 0.0) || !(tol_fd > 0.0) || !(tol_analytic > 0.0))
    raise(Errc::config_error, "steps and tolerances must be positive");
  if (n_params < 1) raise(Errc::config_error, "params sample count must be >= 1");
  if (series_order < 8) raise(Errc::config_error, "series order must be >= 8");
  if (catalog_name.empty() == map_spec.empty())
    raise(Errc::config_error, "exactly one of catalog name or map spec is required");
}

ResolvedMap resolve_map(const SuiteConfig& cfg) {
  if (!cfg.catalog_name.empty()) {
    const CatalogEntry& e = catalog_lookup(cfg.catalog_name);
    return ResolvedMap{HarmonicMap{e.h, e.g, Cx(0.0)}, e.name};
  }
  const size_t sep = cfg.map_spec.find(';');
  if (sep == std::string::npos || cfg.map_spec.find(';', sep + 1) != std::string::npos)
    raise(Errc::config_error, "map spec must be \"<h-expr>;<g-expr>\"");
  try {
    AnalyticFunction h = AnalyticFunction::parse(cfg.map_spec.substr(0, sep));
    AnalyticFunction g = AnalyticFunction::parse(cfg.map_spec.substr(sep + 1));
    return ResolvedMap{HarmonicMap{std::move(h), std::move(g), Cx(0.0)},
                       cfg.map_spec};
  } catch (const Error& e) {
    raise(Errc::config_error, std::string("bad map spec: ") + e.what());
  }
}

namespace {

constexpr double kTolQCancellation = 1e-9;
constexpr double kTolSchwarzianInvariance = 1e-9;
constexpr double kTolType1Jacobian = 1e-12;
constexpr double kTolCompositionIdentity = 1e-12;
constexpr double kErrorResidual = 1e300;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Runs one check body; a domain error becomes a failed check with the
// reason recorded instead of aborting the whole suite.
template <typename Fn>
void guarded(CheckReport& report, const std::string& name, const GridSpec& grid, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    ResidualMax rm;
    rm.update(kErrorResidual, Cx(0.0));
    report.add(make_check(name, grid.summary(), 0.0, rm, 0.0, e.what()));
  }
}

void append(CheckReport& into, CheckReport from) {
  for (CheckResult& c : from.checks) into.checks.push_back(std::move(c));
}

double max_abs_omega_prime(const HarmonicMap& f, const GridSpec& grid) {
  double worst = 0.0;
  for (const Cx& z : grid.points()) {
    const double v = std::abs(omega_jet(f, z, 1).derivative(1));
    if (v > worst) worst = v;
  }
  return worst;
}

void run_schwarzian_invariance(CheckReport& report, const HarmonicMap& f,
                               const GridSpec& grid, std::uint64_t seed) {
  ParamSampler rng(seed ^ 0x5c5c5c5c5c5c5c5cull);
  ResidualMax rm;
  const std::vector<Cx> pts = grid.points();
  for (int k = 0; k < 10; ++k) {
    // Nondegenerate Mobius with entries in the unit square, kept away from
    // degeneracy and from poles near the sampled values.
    Mobius m;
    do {
      m = Mobius{rng.in_square(1.0), rng.in_square(1.0), rng.in_square(1.0),
                 rng.in_square(1.0)};
    } while (std::abs(m.det()) < 0.3);
    int used = 0;
    for (size_t idx = 0; idx < pts.size() && used < 50; idx += 7) {
      const Cx z = pts[idx];
      const Jet hj = f.h.eval_jet(z, 3);
      if (std::abs(hj.derivative(1)) < 0.05) continue;
      if (std::abs(m.c * hj.value() + m.d) < 0.3) continue;
      const Cx direct = schwarzian_jet(hj);
      const Cx composed = schwarzian_jet(mobius_apply_jet(m, hj));
      rm.update(std::abs(composed - direct), z);
      ++used;
    }
  }
  report.add(make_check("schwarzian_mobius_invariance", grid.summary(), 0.0, rm,
                        kTolSchwarzianInvariance, "10 random Mobius maps against h"));
}

void run_q_cancellation(CheckReport& report, const HarmonicMap& f, const GridSpec& grid) {
  ResidualMax rm;
  for (const Cx& z : grid.points()) {
    const Jet w = omega_jet(f, z, 3);
    if (std::abs(w.derivative(1)) < 0.1) continue;  // away from Z only
    rm.update(std::abs(compute_Q_analytic_jet(w) - 2.0 * schwarzian_jet(w)), z);
  }
  report.add(make_check("q_conjugate_cancellation", grid.summary(), 0.0, rm,
                        kTolQCancellation, "Q = 2 S[omega] pointwise"));
}

void run_family_checks(CheckReport& report, const HarmonicMap& f, const GridSpec& grid,
                       const SuiteConfig& cfg) {
  ParamSampler rng(cfg.seed);
  std::vector<FamilyParams> params;
  params.reserve(static_cast<size_t>(cfg.n_params));
  for (int k = 0; k < cfg.n_params; ++k) params.push_back(sample_family_params(rng));

  append(report, verify_family(f, params, grid));
  append(report, verify_family_composition(f, params, grid, kTolCompositionIdentity));

  // params = 0 must reproduce the representative exactly.
  {
    const HarmonicMap id_member = family_member(f, FamilyParams{});
    ResidualMax rm;
    for (const Cx& z : grid.points())
      rm.update(std::abs(map_value(id_member, z) - map_value(f, z)), z);
    report.add(make_check("family_params_zero_identity", grid.summary(), 0.0, rm, 0.0,
                          "alpha=beta=z0=C=0 member equals f"));
  }

  // The fitted 3-point Mobius between omega and a member's dilatation is a
  // disk automorphism whose parameters the report records.
  {
    const FamilyParams p = params.front();
    const HarmonicMap member = family_member(f, p);
    const std::vector<Cx> probes = default_fit_probes();
    std::vector<Cx> src, dst;
    for (const Cx& q : probes) {
      src.push_back(dilatation(f, q));
      dst.push_back(dilatation(member, q));
    }
    const MobiusFit fit = fit_disk_automorphism_values(src, dst, probes, 1e-8);
    const double circle = automorphism_circle_residual(fit.m);
    const DiskAutomorphismParams rec = automorphism_params(fit.m);
    const DiskAutomorphismParams expected = member_automorphism_params(p);
    const double two_pi = 6.283185307179586476925286766559;
    double dgamma = std::abs(rec.gamma - expected.gamma);
    dgamma = std::abs(dgamma - two_pi * std::round(dgamma / two_pi));
    const double param_err = std::max(dgamma, std::abs(rec.z0 - expected.z0));
    ResidualMax rm;
    rm.update(std::max({circle, fit.validation_residual, param_err}), fit.worst_probe);
    report.add(make_check("member_dilatation_automorphism", grid.summary(), 0.0, rm,
                          kAutomorphismCircleTol,
                          "recovered gamma=" + fmt(rec.gamma) +
                              " z0=" + format_cx(rec.z0) +
                              " vs -(alpha+beta)=" + fmt(expected.gamma)));
  }
}

void run_type1_checks(CheckReport& report, const HarmonicMap& f, const GridSpec& grid,
                      const SuiteConfig& cfg) {
  ParamSampler rng(cfg.seed);
  ResidualMax rm;
  for (int k = 0; k < 10; ++k) {
    const Type1Params p = sample_type1_params(rng);
    const HarmonicMap member = type1_family_member(f.h, p);
    const double factor = 1.0 - abs2(p.a);
    for (const Cx& z : grid.points()) {
      const double expected = factor * abs2(f.h.eval_jet(z, 1).derivative(1));
      rm.update(std::abs(jacobian(member, z) - expected), z);
    }
  }
  report.add(make_check("type1_jacobian_law", grid.summary(), 0.0, rm, kTolType1Jacobian,
                        "J = (1-|a|^2)|h'|^2 for 10 sampled (a, alpha, beta, b)"));
}

}  // namespace

CheckReport run_check_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const ResolvedMap resolved = resolve_map(cfg);
  const HarmonicMap& f = resolved.map;
  const GridSpec& grid = cfg.grid;

  CheckReport report;
  report.suite_name = "check:" + resolved.name;

  append(report, is_sense_preserving(f, grid));
  if (!report.all_pass()) return report;  // gate failed; nothing else is defined

  const MapType type = classify_type(f, grid);
  {
    ResidualMax rm;
    rm.update(0.0, Cx(0.0));
    report.add(make_check("classification", grid.summary(), 0.0, rm, 0.0,
                          type == MapType::kType1
                              ? "Type1 (omega constant)"
                              : "Type2 (max |omega'| = " +
                                    fmt(max_abs_omega_prime(f, grid)) + ")"));
  }

  if (type == MapType::kType2) {
    guarded(report, "jacobian_pde_fd", grid,
            [&] { append(report, verify_jacobian_pde(f, grid, cfg.fd_step, cfg.tol_fd)); });
    guarded(report, "jacobian_pde_analytic", grid,
            [&] { append(report, verify_jacobian_pde_analytic(f, grid, cfg.tol_analytic)); });
    guarded(report, "R_harmonic", grid,
            [&] { append(report, verify_R_harmonic(f, grid, cfg.fd_step, cfg.tol_fd)); });
    guarded(report, "q_conjugate_cancellation", grid,
            [&] { run_q_cancellation(report, f, grid); });
    guarded(report, "schwarzian_mobius_invariance", grid,
            [&] { run_schwarzian_invariance(report, f, grid, cfg.seed); });
    guarded(report, "family", grid, [&] { run_family_checks(report, f, grid, cfg); });
  } else {
    guarded(report, "lnJ_harmonic", grid,
            [&] { append(report, verify_lnJ_harmonic(f, grid, cfg.fd_step, cfg.tol_fd)); });
    guarded(report, "type1_jacobian_law", grid,
            [&] { run_type1_checks(report, f, grid, cfg); });
  }
  return report;
}

CheckReport reconstruct_command(const SuiteConfig& cfg) {
  cfg.validate();
  const ResolvedMap resolved = resolve_map(cfg);
  const HarmonicMap& f = resolved.map;
  const GridSpec& grid = cfg.grid;

  CheckReport report;
  report.suite_name = "reconstruct:" + resolved.name;

  append(report, is_sense_preserving(f, grid));
  if (!report.all_pass()) return report;

  if (classify_type(f, grid) == MapType::kType1) {
    ResidualMax rm;
    rm.update(kErrorResidual, Cx(0.0));
    report.add(make_check("type_gate", grid.summary(), 0.0, rm, 0.0,
                          "reconstruction requires a type-2 Jacobian"));
    return report;
  }

  const Cx omega_prime_0 = omega_jet(f, Cx(0.0), 1).derivative(1);
  if (std::abs(omega_prime_0) <= kEpsDiv) {
    ResidualMax rm;
    rm.update(kErrorResidual, Cx(0.0));
    report.add(make_check("z_origin_gate", grid.summary(), 0.0, rm, 0.0,
                          "omega'(0) ~ 0: the origin lies in Z, series solution undefined"));
    return report;
  }

  const PowerSeries omega_s = omega_series(f, cfg.series_order);
  const PowerSeries q = q_series_from_omega(omega_s);
  const PowerSeries omega_rec = solve_schwarzian_series(q, cfg.series_order);
  const std::vector<Cx> probes = default_fit_probes();

  // 2 S[omega_rec] reproduces Q inside |z| <= 0.5.
  guarded(report, "schwarzian_ode_selfconsistency", grid, [&] {
    std::vector<Cx> pts = probes;
    pts.push_back(Cx(0.1, 0.0));
    pts.push_back(Cx(0.0, 0.3));
    pts.push_back(Cx(0.2, -0.2));
    pts.push_back(Cx(0.5, 0.0));
    pts.push_back(Cx(0.0, -0.45));
    ResidualMax rm;
    for (const Cx& z : pts) {
      const Cx lhs = 2.0 * schwarzian_jet(omega_rec.eval_jet(z, 3));
      rm.update(std::abs(lhs - q.eval(z)), z);
    }
    report.add(make_check("schwarzian_ode_selfconsistency", grid.summary(), 0.0, rm,
                          1e-9, "2 S[omega_rec] = Q on |z| <= 0.5"));
  });

  // The true dilatation is a Mobius image of the normalized solution.
  Mobius identification = Mobius::identity();
  bool have_identification = false;
  guarded(report, "mobius_identification", grid, [&] {
    std::vector<Cx> src, dst;
    for (const Cx& p : probes) {
      src.push_back(omega_rec.eval(p));
      dst.push_back(dilatation(f, p));
    }
    const MobiusFit fit = fit_mobius_values(src, dst, probes, 1e-6);
    identification = fit.m;
    have_identification = true;
    ResidualMax rm;
    rm.update(fit.validation_residual, fit.worst_probe);
    report.add(make_check("mobius_identification", grid.summary(), 0.0, rm, 1e-6,
                          "omega = M(omega_rec) on 5 held-out probes"));
  });

  // Direct automorphism relation, available when the normalized solution is
  // itself a valid dilatation for this Jacobian (rho(0) = 1).
  std::string rho_note;
  if (have_identification) {
    const double rho0 = std::abs(omega_prime_0) / (1.0 - abs2(dilatation(f, Cx(0.0))));
    if (is_disk_automorphism(identification)) {
      const DiskAutomorphismParams p = automorphism_params(identification);
      ResidualMax rm;
      rm.update(automorphism_circle_residual(identification), Cx(0.0));
      report.add(make_check("direct_automorphism", grid.summary(), 0.0, rm,
                            kAutomorphismCircleTol,
                            "T = M directly; gamma=" + fmt(p.gamma) +
                                " z0=" + format_cx(p.z0)));
    } else {
      rho_note = "rho(0) = " + fmt(rho0) +
                 " != 1: normalized solution is not automorphism-related; ";
    }
  }

  // Automorphism structure: a forward-constructed automorphism on the true
  // dilatation is recovered from probe values alone.
  guarded(report, "automorphism_recovery", grid, [&] {
    ParamSampler rng(cfg.seed ^ 0xa5a5a5a5a5a5a5a5ull);
    DiskAutomorphismParams truth;
    truth.gamma = rng.angle();
    truth.z0 = rng.in_disk(0.8);
    const Mobius t_true = disk_automorphism(truth);

    std::vector<Cx> src, dst;
    for (const Cx& p : probes) {
      const Cx w = dilatation(f, p);
      src.push_back(w);
      dst.push_back(mobius_apply(t_true, w));
    }
    const MobiusFit fit = fit_disk_automorphism_values(src, dst, probes, 1e-6);
    const DiskAutomorphismParams rec = automorphism_params(fit.m);
    double dgamma = std::abs(rec.gamma - truth.gamma);
    const double two_pi = 6.283185307179586476925286766559;
    while (dgamma > two_pi / 2.0) dgamma = std::abs(dgamma - two_pi);
    const double param_err = std::max(dgamma, std::abs(rec.z0 - truth.z0));
    ResidualMax rm;
    rm.update(std::max(param_err, fit.validation_residual), fit.worst_probe);
    report.add(make_check("automorphism_recovery", grid.summary(), 0.0, rm, 1e-6,
                          rho_note + "recovered gamma=" + fmt(rec.gamma) +
                              " z0=" + format_cx(rec.z0)));
  });

  if (cfg.blackbox) {
    guarded(report, "q_blackbox", grid, [&] {
      const ScalarField jf{[&f](Cx z) { return jacobian(f, z); }, f.eval_radius()};
      const Cx points[4] = {Cx(0.3, 0.0), Cx(-0.25, 0.0), Cx(0.2, 0.2), Cx(-0.1, -0.3)};
      ResidualMax rm;
      for (const Cx& z : points) {
        const Cx q_true = 2.0 * schwarzian_jet(omega_jet(f, z, 3));
        const Cx q_bb = compute_Q_blackbox(jf, z, cfg.inner_step, cfg.outer_step);
        const double tol_here = std::abs(q_true) >= 0.1
                                    ? cfg.tol_blackbox * std::abs(q_true)
                                    : cfg.tol_blackbox;
        rm.update(std::abs(q_bb - q_true) / tol_here, z);
      }
      report.add(make_check("q_blackbox", grid.summary(), cfg.outer_step, rm, 1.0,
                            "residual scaled per point: relative tol, absolute below 0.1"));
    });
  }

  return report;
}

void emit_grid_csv(const HarmonicMap& f, const GridSpec& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
  out << "x,y,re_f,im_f,jacobian,re_omega,im_omega\n";
  char buf[256];
  for (const Cx& z : grid.points()) {
    const Cx fv = map_value(f, z);
    const double j = jacobian(f, z);
    const Cx w = dilatation(f, z);
    std::snprintf(buf, sizeof(buf),
                  "%.17e,%.17e,%.17e,%.17e,%.17e,%.17e,%.17e\n", z.real(), z.imag(),
                  fv.real(), fv.imag(), j, w.real(), w.imag());
    out << buf;
  }
  if (!out) raise(Errc::io_error, "failed writing grid CSV to '" + path + "'");
}

}  // namespace harmlab
