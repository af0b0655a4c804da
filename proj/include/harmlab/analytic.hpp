#pragma once

#include <string>
#include <variant>

#include "harmlab/cx.hpp"
#include "harmlab/expr.hpp"
#include "harmlab/jet.hpp"
#include "harmlab/power_series.hpp"

namespace harmlab {

// A holomorphic function on the disk: either an expression tree (evaluated
// exactly at any point of the disk) or a truncated power series at 0
// (evaluated inside its stated radius).
class AnalyticFunction {
 public:
  AnalyticFunction(ExprPtr expr) : repr_(std::move(expr)) {}
  AnalyticFunction(PowerSeries series) : repr_(std::move(series)) {}

  static AnalyticFunction parse(const std::string& text) {
    return AnalyticFunction(parse_expr(text));
  }

  bool is_series() const { return std::holds_alternative<PowerSeries>(repr_); }
  const PowerSeries& series() const { return std::get<PowerSeries>(repr_); }
  const ExprPtr& expr() const { return std::get<ExprPtr>(repr_); }

  Jet eval_jet(Cx z, int order) const;
  Cx eval(Cx z) const { return eval_jet(z, 0).value(); }

  // Radius inside which evaluation is defined: the series radius, or the
  // whole working disk for expression trees.
  double eval_radius() const;

 private:
  std::variant<ExprPtr, PowerSeries> repr_;
};

inline constexpr int kDefaultSeriesOrder = 64;

// Taylor coefficients at 0, from an order-N jet (exact for expression trees
// up to round-off).
PowerSeries series_from_expr(const ExprPtr& ast, int order,
                             double r_max = PowerSeries::kDefaultRadius);

PowerSeries to_series(const AnalyticFunction& fn, int order,
                      double r_max = PowerSeries::kDefaultRadius);

// c1*f1 + c2*f2. Stays an expression tree when both inputs are trees;
// otherwise falls back to the series representation at the given order.
AnalyticFunction linear_combine(Cx c1, const AnalyticFunction& f1, Cx c2,
                                const AnalyticFunction& f2,
                                int series_order = kDefaultSeriesOrder);

AnalyticFunction scale(Cx c, const AnalyticFunction& f);

}  // namespace harmlab
