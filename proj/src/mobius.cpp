#include "harmlab/mobius.hpp"

#include <cmath>

#include "harmlab/errors.hpp"
#include "harmlab/report.hpp"

namespace harmlab {

void Mobius::validate() const {
  if (std::abs(det()) <= kEpsDet)
    raise(Errc::degenerate_mobius, "|ad - bc| = " + std::to_string(std::abs(det())));
}

Cx mobius_apply(const Mobius& m, Cx w) {
  m.validate();
  const Cx denom = m.c * w + m.d;
  if (std::abs(denom) <= kEpsDiv)
    raise(Errc::pole_hit, "Mobius pole at " + format_cx(w));
  return (m.a * w + m.b) / denom;
}

Jet mobius_apply_jet(const Mobius& m, const Jet& w) {
  m.validate();
  const Jet num = m.a * w + m.b;
  const Jet den = m.c * w + m.d;
  if (std::abs(den.value()) <= kEpsDiv)
    raise(Errc::pole_hit, "Mobius pole at " + format_cx(w.value()));
  return num * recip(den);
}

Mobius mobius_compose(const Mobius& m1, const Mobius& m2) {
  Mobius r;
  r.a = m1.a * m2.a + m1.b * m2.c;
  r.b = m1.a * m2.b + m1.b * m2.d;
  r.c = m1.c * m2.a + m1.d * m2.c;
  r.d = m1.c * m2.b + m1.d * m2.d;
  r.validate();
  return r;
}

Mobius mobius_inverse(const Mobius& m) {
  m.validate();
  return Mobius{m.d, -m.b, -m.c, m.a};
}

void DiskAutomorphismParams::validate() const {
  if (std::abs(z0) > 0.95)
    raise(Errc::invalid_parameter,
          "|z0| = " + std::to_string(std::abs(z0)) + " exceeds the 0.95 guard");
}

Mobius disk_automorphism(const DiskAutomorphismParams& p) {
  if (std::abs(p.z0) >= 1.0)
    raise(Errc::invalid_parameter, "automorphism center must satisfy |z0| < 1");
  p.validate();
  const Cx phase = unit_phase(p.gamma);
  return Mobius{phase, phase * p.z0, std::conj(p.z0), Cx(1.0)};
}

double automorphism_circle_residual(const Mobius& m) {
  constexpr int kSamples = 32;
  const double two_pi = 6.283185307179586476925286766559;
  double worst = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const Cx w = unit_phase(two_pi * k / kSamples);
    const double r = std::abs(std::abs(mobius_apply(m, w)) - 1.0);
    if (r > worst) worst = r;
  }
  return worst;
}

bool is_disk_automorphism(const Mobius& m) {
  m.validate();
  try {
    return automorphism_circle_residual(m) <= kAutomorphismCircleTol &&
           std::abs(mobius_apply(m, Cx(0.0))) < 1.0;
  } catch (const Error&) {
    return false;  // pole on the circle or at the origin
  }
}

DiskAutomorphismParams automorphism_params(const Mobius& m) {
  const Cx z0 = -mobius_apply(mobius_inverse(m), Cx(0.0));
  if (std::abs(z0) >= 1.0)
    raise(Errc::not_disk_automorphism, "M^{ -1 }(0) lies outside the disk");
  // T'(w) = det / (c w + d)^2.
  const Cx denom = m.c * (-z0) + m.d;
  const Cx deriv = m.det() / (denom * denom);
  const Cx phase = deriv * (1.0 - abs2(z0));
  return DiskAutomorphismParams{std::arg(phase), z0};
}

namespace {

// Matrix of the map sending (w1, w2, w3) to (0, 1, infinity).
Mobius to_standard_triple(const std::array<Cx, 3>& w) {
  const Cx d23 = w[1] - w[2];
  const Cx d21 = w[1] - w[0];
  Mobius m{d23, -w[0] * d23, d21, -w[2] * d21};
  if (std::abs(m.det()) <= kEpsDet)
    raise(Errc::degenerate_mobius, "cross-ratio points nearly coincide");
  return m;
}

void require_distinct(const std::array<Cx, 3>& pts, const char* label) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]) <= kEpsDiv)
        raise(Errc::degenerate_mobius,
              std::string(label) + " points for the 3-point fit coincide");
}

}  // namespace

Mobius mobius_from_3_points(const std::array<Cx, 3>& src, const std::array<Cx, 3>& dst) {
  require_distinct(src, "source");
  require_distinct(dst, "destination");
  const Mobius ms = to_standard_triple(src);
  const Mobius md = to_standard_triple(dst);
  return mobius_compose(mobius_inverse(md), ms);
}

MobiusFit fit_mobius_values(std::span<const Cx> src, std::span<const Cx> dst,
                            std::span<const Cx> probes, double tol) {
  if (src.size() < 3 || src.size() != dst.size() || probes.size() != src.size())
    raise(Errc::invalid_parameter, "Mobius fit needs matching value lists of >= 3 probes");
  const Mobius m = mobius_from_3_points({src[0], src[1], src[2]}, {dst[0], dst[1], dst[2]});
  MobiusFit fit{m, 0.0, probes.size() > 3 ? probes[3] : probes[0]};
  ResidualMax rm;
  for (size_t k = 3; k < src.size(); ++k) {
    rm.update(std::abs(mobius_apply(m, src[k]) - dst[k]), probes[k]);
  }
  if (rm.seen) {
    fit.validation_residual = rm.value;
    fit.worst_probe = rm.where;
  }
  if (fit.validation_residual > tol)
    raise(Errc::fit_mismatch,
          "Mobius fit validation residual " + std::to_string(fit.validation_residual) +
              " exceeds " + std::to_string(tol));
  return fit;
}

MobiusFit fit_disk_automorphism_values(std::span<const Cx> rec_vals,
                                       std::span<const Cx> target_vals,
                                       std::span<const Cx> probes, double tol) {
  MobiusFit fit = fit_mobius_values(rec_vals, target_vals, probes, tol);
  if (!is_disk_automorphism(fit.m))
    raise(Errc::not_disk_automorphism,
          "fitted Mobius map is not an automorphism of the disk");
  return fit;
}

Mobius fit_disk_automorphism(const AnalyticFunction& omega_target,
                             const AnalyticFunction& omega_rec,
                             std::span<const Cx> probes, double tol) {
  std::vector<Cx> rec_vals;
  std::vector<Cx> target_vals;
  rec_vals.reserve(probes.size());
  target_vals.reserve(probes.size());
  for (const Cx& p : probes) {
    rec_vals.push_back(omega_rec.eval(p));
    target_vals.push_back(omega_target.eval(p));
  }
  return fit_disk_automorphism_values(rec_vals, target_vals, probes, tol).m;
}

}  // namespace harmlab
