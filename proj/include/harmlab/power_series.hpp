#pragma once

#include <vector>

#include "harmlab/cx.hpp"
#include "harmlab/jet.hpp"

namespace harmlab {

// Power series centered at 0, truncated at trunc_order. Evaluation is only
// meaningful inside the stated radius; catalog series are built with enough
// terms that the tail is far below round-off there.
class PowerSeries {
 public:
  static constexpr double kDefaultRadius = 0.7;

  explicit PowerSeries(std::vector<Cx> coeffs, double r_max = kDefaultRadius);

  int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double r_max() const { return r_max_; }
  const std::vector<Cx>& coeffs() const { return coeffs_; }
  Cx coeff(int n) const;

  // Jet of the truncated polynomial at z (exact for the polynomial).
  Jet eval_jet(Cx z, int order) const;
  Cx eval(Cx z) const { return eval_jet(z, 0).value(); }

  PowerSeries derivative() const;

  // Term-wise integral with zero constant term; order grows by one.
  PowerSeries antiderivative() const;

  PowerSeries truncated(int order) const;
  PowerSeries with_radius(double r_max) const;

 private:
  std::vector<Cx> coeffs_;
  double r_max_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(Cx s, const PowerSeries& a);

// Truncated Cauchy product; the result keeps the shorter truncation order.
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

// Reciprocal by coefficient recurrence; needs a nonzero constant term.
PowerSeries recip(const PowerSeries& a);
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

}  // namespace harmlab
