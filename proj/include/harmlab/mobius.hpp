#pragma once

#include <array>
#include <span>

#include "harmlab/analytic.hpp"
#include "harmlab/cx.hpp"
#include "harmlab/jet.hpp"

namespace harmlab {

// Fractional-linear transformation w -> (a w + b) / (c w + d), ad - bc != 0.
struct Mobius {
  Cx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  Cx det() const { return a * d - b * c; }
  void validate() const;

  static Mobius identity() { return Mobius{}; }
};

Cx mobius_apply(const Mobius& m, Cx w);
Jet mobius_apply_jet(const Mobius& m, const Jet& w);

// Composition in mapping order: (m1 o m2)(w) = m1(m2(w)).
Mobius mobius_compose(const Mobius& m1, const Mobius& m2);
Mobius mobius_inverse(const Mobius& m);

// T(w) = e^{i gamma} (w + z0) / (1 + conj(z0) w).
struct DiskAutomorphismParams {
  double gamma = 0.0;
  Cx z0{0.0, 0.0};

  void validate() const;  // |z0| <= 0.95 numerical guard
};

Mobius disk_automorphism(const DiskAutomorphismParams& p);

// Max over 32 circle samples of ||M(e^{i theta})| - 1|.
double automorphism_circle_residual(const Mobius& m);

inline constexpr double kAutomorphismCircleTol = 1e-9;

bool is_disk_automorphism(const Mobius& m);

// Recovers (gamma, z0) from an automorphism via T(-z0) = 0 and the phase of
// T'(-z0) (1 - |z0|^2).
DiskAutomorphismParams automorphism_params(const Mobius& m);

// Unique Mobius with M(src_i) = dst_i, via the cross-ratio construction.
Mobius mobius_from_3_points(const std::array<Cx, 3>& src, const std::array<Cx, 3>& dst);

struct MobiusFit {
  Mobius m;
  double validation_residual = 0.0;
  Cx worst_probe{0.0, 0.0};
};

// Fits on the first three value pairs and validates on the rest; raises
// Errc::fit_mismatch past tol.
MobiusFit fit_mobius_values(std::span<const Cx> src, std::span<const Cx> dst,
                            std::span<const Cx> probes, double tol);

// Structured fit: M maps omega_rec probe values onto omega_target values,
// validated on held-out probes and required to be a disk automorphism.
Mobius fit_disk_automorphism(const AnalyticFunction& omega_target,
                             const AnalyticFunction& omega_rec,
                             std::span<const Cx> probes, double tol = 1e-6);

MobiusFit fit_disk_automorphism_values(std::span<const Cx> rec_vals,
                                       std::span<const Cx> target_vals,
                                       std::span<const Cx> probes, double tol = 1e-6);

}  // namespace harmlab
