#include "harmlab/family.hpp"

#include <cmath>

#include "harmlab/errors.hpp"

namespace harmlab {

void FamilyParams::validate() const {
  if (std::abs(z0) > 0.95)
    raise(Errc::invalid_parameter,
          "|z0| = " + std::to_string(std::abs(z0)) + " exceeds the 0.95 guard");
}

void Type1Params::validate() const {
  if (std::abs(a) >= 1.0)
    raise(Errc::invalid_parameter, "type-1 family needs |a| < 1");
}

HarmonicMap rotate_parts(const HarmonicMap& f, double alpha, double beta) {
  return HarmonicMap{scale(unit_phase(alpha), f.h), scale(unit_phase(-beta), f.g), f.c};
}

RealAffineMap affine_map(const FamilyParams& params) {
  params.validate();
  const double s = 1.0 / std::sqrt(1.0 - abs2(params.z0));
  RealAffineMap a;
  a.p = Cx(s, 0.0);
  a.q = unit_phase(params.alpha + params.beta) * std::conj(params.z0) * s;
  a.c = params.C;
  return a;
}

HarmonicMap family_member(const HarmonicMap& f, const FamilyParams& params,
                          int series_order) {
  params.validate();
  const double s = 1.0 / std::sqrt(1.0 - abs2(params.z0));
  const Cx ea = unit_phase(params.alpha) * s;
  const Cx eb = unit_phase(-params.beta) * s;

  AnalyticFunction big_h = linear_combine(ea, f.h, ea * std::conj(params.z0), f.g,
                                          series_order);
  AnalyticFunction big_g = linear_combine(eb * params.z0, f.h, eb, f.g, series_order);

  // The affine stage also moves the representative's additive constant.
  const RealAffineMap a = affine_map(params);
  const Cx constant = a.p * f.c + a.q * std::conj(f.c) + a.c;

  HarmonicMap member{std::move(big_h), std::move(big_g), constant};
  if (jacobian(member, Cx(0.0)) <= 0.0)
    raise(Errc::sense_reversed, "family member lost orientation (internal error)");
  return member;
}

Cx member_dilatation_closed_form(Cx omega_val, const FamilyParams& params) {
  return unit_phase(-(params.alpha + params.beta)) * (omega_val + params.z0) /
         (Cx(1.0) + std::conj(params.z0) * omega_val);
}

DiskAutomorphismParams member_automorphism_params(const FamilyParams& params) {
  params.validate();
  return DiskAutomorphismParams{-(params.alpha + params.beta), params.z0};
}

HarmonicMap special_case_family(const AnalyticFunction& v, const FamilyParams& params,
                                int order) {
  params.validate();
  const PowerSeries vs = to_series(v, order, v.eval_radius());

  double tail = 0.0;
  for (int n = 1; n <= vs.trunc_order(); ++n) tail = std::max(tail, std::abs(vs.coeff(n)));
  if (tail <= 1e-14)
    raise(Errc::invalid_parameter, "v must be nonconstant for the special case");

  // |v| < 1 spot check near the rim of the series domain.
  const double r_check = 0.93 * vs.r_max();
  for (int k = 0; k < 32; ++k) {
    const Cx z = r_check * unit_phase(6.283185307179586 * k / 32.0);
    if (std::abs(vs.eval(z)) >= 1.0)
      raise(Errc::invalid_parameter, "|v| must stay below 1 on the grid");
  }

  const PowerSeries antider = vs.antiderivative();
  const PowerSeries zs = PowerSeries({Cx(0.0), Cx(1.0)}, vs.r_max());

  const double s = 1.0 / std::sqrt(1.0 - abs2(params.z0));
  const Cx ea = unit_phase(params.alpha) * s;
  const Cx eb = unit_phase(-params.beta) * s;
  PowerSeries hs = ea * zs + (ea * std::conj(params.z0)) * antider;
  PowerSeries gs = (eb * params.z0) * zs + eb * antider;
  return HarmonicMap{AnalyticFunction(std::move(hs)), AnalyticFunction(std::move(gs)),
                     params.C};
}

HarmonicMap type1_family_member(const AnalyticFunction& h, const Type1Params& params) {
  params.validate();
  // e^{i alpha} h + e^{i beta} a conj(h) + b, stored as (H, G, c) with
  // G = conj(e^{i beta} a) h.
  return HarmonicMap{scale(unit_phase(params.alpha), h),
                     scale(unit_phase(-params.beta) * std::conj(params.a), h), params.b};
}

CheckReport verify_family(const HarmonicMap& f, std::span<const FamilyParams> params_list,
                          const GridSpec& grid, const FamilyTolerances& tol) {
  if (classify_type(f, grid) != MapType::kType2)
    raise(Errc::invalid_parameter,
          "equal-Jacobian family construction applies to type-2 Jacobians");

  ResidualMax r_jac, r_dil, r_mod_h, r_mod_g;
  const std::vector<Cx> pts = grid.points();
  for (const FamilyParams& params : params_list) {
    const HarmonicMap member = family_member(f, params);
    const double s2 = 1.0 - abs2(params.z0);
    for (const Cx& z : pts) {
      const Cx hp = f.h.eval_jet(z, 1).derivative(1);
      const Cx gp = f.g.eval_jet(z, 1).derivative(1);
      const Cx big_hp = member.h.eval_jet(z, 1).derivative(1);
      const Cx big_gp = member.g.eval_jet(z, 1).derivative(1);

      const double j_f = abs2(hp) - abs2(gp);
      const double j_m = abs2(big_hp) - abs2(big_gp);
      r_jac.update(std::abs(j_m - j_f) / (1.0 + j_f), z);

      const Cx omega_f = gp / hp;
      const Cx omega_m = big_gp / big_hp;
      r_dil.update(std::abs(omega_m - member_dilatation_closed_form(omega_f, params)), z);

      const Cx num_h = hp + std::conj(params.z0) * gp;
      r_mod_h.update(std::abs(abs2(big_hp) - abs2(num_h) / s2), z);

      const Cx num_g = gp + params.z0 * hp;
      r_mod_g.update(std::abs(std::abs(big_gp) - std::abs(num_g) / std::sqrt(s2)), z);
    }
  }

  CheckReport report;
  report.suite_name = "family";
  const std::string gs = grid.summary();
  const std::string n = std::to_string(params_list.size()) + " params";
  report.add(make_check("family_equal_jacobian", gs, 0.0, r_jac, tol.jacobian, n));
  report.add(make_check("family_dilatation_law", gs, 0.0, r_dil, tol.dilatation, n));
  report.add(make_check("family_modulus_H", gs, 0.0, r_mod_h, tol.modulus_h, n));
  report.add(make_check("family_modulus_G", gs, 0.0, r_mod_g, tol.modulus_g, n));
  return report;
}

CheckReport verify_family_composition(const HarmonicMap& f,
                                      std::span<const FamilyParams> params_list,
                                      const GridSpec& grid, double tol) {
  ResidualMax rm;
  for (const FamilyParams& params : params_list) {
    const HarmonicMap member = family_member(f, params);
    const HarmonicMap rotated = rotate_parts(f, params.alpha, params.beta);
    const RealAffineMap a = affine_map(params);
    for (const Cx& z : grid.points()) {
      const Cx direct = map_value(member, z);
      const Cx composed = a.apply(map_value(rotated, z));
      rm.update(std::abs(direct - composed), z);
    }
  }
  CheckReport report;
  report.suite_name = "family_composition";
  report.add(make_check("family_composition", grid.summary(), 0.0, rm, tol,
                        "member vs affine o rotation"));
  return report;
}

FamilyParams sample_family_params(ParamSampler& rng) {
  FamilyParams p;
  p.alpha = rng.angle();
  p.beta = rng.angle();
  p.z0 = rng.in_disk(0.8);
  p.C = rng.in_square(1.0);
  return p;
}

Type1Params sample_type1_params(ParamSampler& rng) {
  Type1Params p;
  p.a = rng.in_disk(0.9);
  p.b = rng.in_square(1.0);
  p.alpha = rng.angle();
  p.beta = rng.angle();
  return p;
}

}  // namespace harmlab
