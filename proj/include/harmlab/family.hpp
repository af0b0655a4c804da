#pragma once

#include <span>

#include "harmlab/harmonic.hpp"
#include "harmlab/mobius.hpp"
#include "harmlab/sampler.hpp"

namespace harmlab {

// Parameters of the equal-Jacobian family
// F = e^{i alpha}(h + conj(z0) g)/sqrt(1-|z0|^2)
//   + e^{i beta} conj(g + z0 h)/sqrt(1-|z0|^2) + C.
struct FamilyParams {
  double alpha = 0.0;
  double beta = 0.0;
  Cx z0{0.0, 0.0};
  Cx C{0.0, 0.0};

  void validate() const;  // |z0| <= 0.95
};

// Type-1 family: e^{i alpha} h + e^{i beta} a conj(h) + b.
struct Type1Params {
  Cx a{0.0, 0.0};
  Cx b{0.0, 0.0};
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const;  // |a| < 1
};

// z -> p z + q conj(z) + c; the sense-preserving factor has |p|^2 - |q|^2 = 1.
struct RealAffineMap {
  Cx p{1.0, 0.0};
  Cx q{0.0, 0.0};
  Cx c{0.0, 0.0};

  Cx apply(Cx z) const { return p * z + q * std::conj(z) + c; }
  double jacobian() const { return abs2(p) - abs2(q); }
};

// R_{alpha,beta}[f] = e^{i alpha} h + e^{i beta} conj(g).
HarmonicMap rotate_parts(const HarmonicMap& f, double alpha, double beta);

// A_{alpha,beta,z0}(z) = (1-|z0|^2)^{-1/2}(z + e^{i(alpha+beta)} conj(z0 z)) + C.
RealAffineMap affine_map(const FamilyParams& params);

HarmonicMap family_member(const HarmonicMap& f, const FamilyParams& params,
                          int series_order = kDefaultSeriesOrder);

// omega_F = e^{-i(alpha+beta)} (omega + z0)/(1 + conj(z0) omega); the phase
// gamma = -(alpha+beta) is the automorphism angle of the member.
Cx member_dilatation_closed_form(Cx omega_val, const FamilyParams& params);

// The disk automorphism T with omega_F = T o omega: gamma = -(alpha+beta)
// (derived, not a free parameter), center z0.
DiskAutomorphismParams member_automorphism_params(const FamilyParams& params);

// The J = 1 - |v|^2 special case, with the antiderivative of v taken on the
// series path.
HarmonicMap special_case_family(const AnalyticFunction& v, const FamilyParams& params,
                                int order = kDefaultSeriesOrder);

HarmonicMap type1_family_member(const AnalyticFunction& h, const Type1Params& params);

struct FamilyTolerances {
  double jacobian = 1e-11;
  double dilatation = 1e-11;
  double modulus_h = 1e-11;
  double modulus_g = 1e-11;
};

// Four residual maxima per sweep: equal Jacobians, the dilatation law, and
// the |H'| / |G'| identities.
CheckReport verify_family(const HarmonicMap& f, std::span<const FamilyParams> params_list,
                          const GridSpec& grid, const FamilyTolerances& tol = {});

// |F - A o R[f]| pointwise (the two published forms of the family).
CheckReport verify_family_composition(const HarmonicMap& f,
                                      std::span<const FamilyParams> params_list,
                                      const GridSpec& grid, double tol = 1e-12);

FamilyParams sample_family_params(ParamSampler& rng);
Type1Params sample_type1_params(ParamSampler& rng);

}  // namespace harmlab
