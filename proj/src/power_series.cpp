#include "harmlab/power_series.hpp"

#include <algorithm>

#include "harmlab/errors.hpp"

namespace harmlab {

PowerSeries::PowerSeries(std::vector<Cx> coeffs, double r_max)
    : coeffs_(std::move(coeffs)), r_max_(r_max) {
  if (coeffs_.empty()) raise(Errc::invalid_parameter, "power series needs at least one coefficient");
  if (!(r_max > 0.0 && r_max < 1.0))
    raise(Errc::invalid_parameter, "series evaluation radius must lie in (0, 1)");
  for (const Cx& c : coeffs_) {
    if (!is_finite(c)) raise(Errc::non_finite, "power series coefficient is not finite");
  }
}

Cx PowerSeries::coeff(int n) const {
  if (n < 0 || n > trunc_order()) return Cx(0.0);
  return coeffs_[static_cast<size_t>(n)];
}

Jet PowerSeries::eval_jet(Cx z, int order) const {
  if (std::abs(z) > r_max_)
    raise(Errc::radius_exceeded,
          "series evaluated at |z| = " + std::to_string(std::abs(z)) +
              " beyond r_max = " + std::to_string(r_max_));
  // Horner scheme in the jet of z.
  const Jet w = Jet::variable(z, order);
  Jet acc = Jet::constant(coeffs_.back(), order);
  for (int n = trunc_order() - 1; n >= 0; --n) {
    acc = acc * w + coeffs_[static_cast<size_t>(n)];
  }
  return acc;
}

PowerSeries PowerSeries::derivative() const {
  if (trunc_order() == 0) return PowerSeries({Cx(0.0)}, r_max_);
  std::vector<Cx> out(coeffs_.size() - 1);
  for (size_t n = 0; n + 1 < coeffs_.size(); ++n)
    out[n] = static_cast<double>(n + 1) * coeffs_[n + 1];
  return PowerSeries(std::move(out), r_max_);
}

PowerSeries PowerSeries::antiderivative() const {
  std::vector<Cx> out(coeffs_.size() + 1, Cx(0.0));
  for (size_t n = 0; n < coeffs_.size(); ++n)
    out[n + 1] = coeffs_[n] / static_cast<double>(n + 1);
  return PowerSeries(std::move(out), r_max_);
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order < 0) raise(Errc::invalid_parameter, "truncation order must be >= 0");
  std::vector<Cx> out(static_cast<size_t>(order) + 1, Cx(0.0));
  for (int n = 0; n <= order && n <= trunc_order(); ++n)
    out[static_cast<size_t>(n)] = coeffs_[static_cast<size_t>(n)];
  return PowerSeries(std::move(out), r_max_);
}

PowerSeries PowerSeries::with_radius(double r_max) const {
  return PowerSeries(coeffs_, r_max);
}

namespace {
double shared_radius(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.r_max(), b.r_max());
}
}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::max(a.trunc_order(), b.trunc_order());
  std::vector<Cx> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  return PowerSeries(std::move(out), shared_radius(a, b));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::max(a.trunc_order(), b.trunc_order());
  std::vector<Cx> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
  return PowerSeries(std::move(out), shared_radius(a, b));
}

PowerSeries operator*(Cx s, const PowerSeries& a) {
  std::vector<Cx> out = a.coeffs();
  for (Cx& c : out) c *= s;
  return PowerSeries(std::move(out), a.r_max());
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Cx> out(static_cast<size_t>(n) + 1, Cx(0.0));
  for (int m = 0; m <= n; ++m) {
    Cx acc(0.0);
    for (int j = 0; j <= m; ++j) acc += a.coeff(j) * b.coeff(m - j);
    out[static_cast<size_t>(m)] = acc;
  }
  return PowerSeries(std::move(out), shared_radius(a, b));
}

PowerSeries recip(const PowerSeries& a) {
  if (std::abs(a.coeff(0)) <= kEpsDiv)
    raise(Errc::division_near_zero, "series reciprocal with vanishing constant term");
  std::vector<Cx> out(a.coeffs().size(), Cx(0.0));
  out[0] = Cx(1.0) / a.coeff(0);
  for (int m = 1; m <= a.trunc_order(); ++m) {
    Cx acc(0.0);
    for (int j = 1; j <= m; ++j) acc += a.coeff(j) * out[static_cast<size_t>(m - j)];
    out[static_cast<size_t>(m)] = -acc / a.coeff(0);
  }
  return PowerSeries(std::move(out), a.r_max());
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  return a * recip(b);
}

}  // namespace harmlab
