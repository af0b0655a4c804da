#include "harmlab/analytic.hpp"

#include <algorithm>

#include "harmlab/errors.hpp"

namespace harmlab {

namespace {
// Expression trees are exact wherever they evaluate; 0.95 keeps Mobius-type
// denominators in the catalog away from their poles on |z| = 1 neighborhoods.
constexpr double kExprRadius = 0.95;
}  // namespace

Jet AnalyticFunction::eval_jet(Cx z, int order) const {
  Jet out = is_series() ? series().eval_jet(z, order)
                        : harmlab::eval_jet(expr(), z, order);
  if (!out.finite())
    raise(Errc::non_finite, "evaluation produced a non-finite jet");
  return out;
}

double AnalyticFunction::eval_radius() const {
  return is_series() ? series().r_max() : kExprRadius;
}

PowerSeries series_from_expr(const ExprPtr& ast, int order, double r_max) {
  Jet j = eval_jet(ast, Cx(0.0), order);
  if (!j.finite())
    raise(Errc::non_finite, "expression is singular at 0");
  return PowerSeries(j.coeffs(), r_max);
}

PowerSeries to_series(const AnalyticFunction& fn, int order, double r_max) {
  if (fn.is_series()) {
    const PowerSeries& s = fn.series();
    return s.truncated(std::max(order, s.trunc_order()))
        .with_radius(std::min(r_max, s.r_max()));
  }
  return series_from_expr(fn.expr(), order, r_max);
}

AnalyticFunction linear_combine(Cx c1, const AnalyticFunction& f1, Cx c2,
                                const AnalyticFunction& f2, int series_order) {
  if (!f1.is_series() && !f2.is_series()) {
    return AnalyticFunction(expr_add(expr_mul(expr_const(c1), f1.expr()),
                                     expr_mul(expr_const(c2), f2.expr())));
  }
  const int n = std::max({series_order,
                          f1.is_series() ? f1.series().trunc_order() : 0,
                          f2.is_series() ? f2.series().trunc_order() : 0});
  const double r = std::min(f1.eval_radius(), f2.eval_radius());
  PowerSeries a = to_series(f1, n, r);
  PowerSeries b = to_series(f2, n, r);
  return AnalyticFunction(c1 * a + c2 * b);
}

AnalyticFunction scale(Cx c, const AnalyticFunction& f) {
  if (f.is_series()) return AnalyticFunction(c * f.series());
  return AnalyticFunction(expr_mul(expr_const(c), f.expr()));
}

}  // namespace harmlab
