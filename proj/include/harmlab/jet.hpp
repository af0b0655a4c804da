#pragma once

#include <cstddef>
#include <vector>

#include "harmlab/cx.hpp"
#include "harmlab/errors.hpp"

namespace harmlab {

// Truncated Taylor expansion of an analytic function at a point.
// Coefficient m stores f^(m)/m!, which keeps the Cauchy-product recurrences
// free of factorials.
class Jet {
 public:
  explicit Jet(int order) : c_(static_cast<size_t>(check_order(order)) + 1, Cx(0.0)) {}

  static Jet constant(Cx value, int order) {
    Jet j(order);
    j.c_[0] = value;
    return j;
  }

  // The identity function z at the expansion point: [value, 1, 0, ...].
  static Jet variable(Cx value, int order) {
    Jet j(order);
    j.c_[0] = value;
    if (order >= 1) j.c_[1] = Cx(1.0);
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  Cx& operator[](int m) { return c_[static_cast<size_t>(m)]; }
  const Cx& operator[](int m) const { return c_[static_cast<size_t>(m)]; }

  Cx value() const { return c_[0]; }

  // Raw derivative f^(m) = m! * c_m; only small m are ever requested here.
  Cx derivative(int m) const {
    double fact = 1.0;
    for (int k = 2; k <= m; ++k) fact *= k;
    return c_[static_cast<size_t>(m)] * fact;
  }

  bool finite() const {
    for (const Cx& v : c_) {
      if (!is_finite(v)) return false;
    }
    return true;
  }

  const std::vector<Cx>& coeffs() const { return c_; }

 private:
  static int check_order(int order) {
    if (order < 0) raise(Errc::invalid_parameter, "jet order must be >= 0");
    return order;
  }

  std::vector<Cx> c_;
};

namespace detail {
inline void require_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order())
    raise(Errc::order_mismatch, "jet operands have different orders");
}
}  // namespace detail

inline Jet operator+(const Jet& a, const Jet& b) {
  detail::require_same_order(a, b);
  Jet r(a.order());
  for (int m = 0; m <= a.order(); ++m) r[m] = a[m] + b[m];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  detail::require_same_order(a, b);
  Jet r(a.order());
  for (int m = 0; m <= a.order(); ++m) r[m] = a[m] - b[m];
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r(a.order());
  for (int m = 0; m <= a.order(); ++m) r[m] = -a[m];
  return r;
}

// Cauchy product: c_m = sum_{j<=m} a_j b_{m-j}.
inline Jet operator*(const Jet& a, const Jet& b) {
  detail::require_same_order(a, b);
  Jet r(a.order());
  for (int m = 0; m <= a.order(); ++m) {
    Cx acc(0.0);
    for (int j = 0; j <= m; ++j) acc += a[j] * b[m - j];
    r[m] = acc;
  }
  return r;
}

inline Jet operator*(Cx s, const Jet& a) {
  Jet r(a.order());
  for (int m = 0; m <= a.order(); ++m) r[m] = s * a[m];
  return r;
}

inline Jet operator+(const Jet& a, Cx s) {
  Jet r = a;
  r[0] += s;
  return r;
}

// Reciprocal by long division; requires the leading coefficient to stay away
// from zero (evaluation at a zero of the denominator).
inline Jet recip(const Jet& a) {
  if (std::abs(a.value()) <= kEpsDiv)
    raise(Errc::division_near_zero,
          "jet reciprocal at |c0| = " + std::to_string(std::abs(a.value())));
  Jet r(a.order());
  r[0] = Cx(1.0) / a[0];
  for (int m = 1; m <= a.order(); ++m) {
    Cx acc(0.0);
    for (int j = 1; j <= m; ++j) acc += a[j] * r[m - j];
    r[m] = -acc / a[0];
  }
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }

inline Jet exp(const Jet& a) {
  Jet r(a.order());
  r[0] = std::exp(a[0]);
  for (int m = 1; m <= a.order(); ++m) {
    Cx acc(0.0);
    for (int j = 1; j <= m; ++j) acc += static_cast<double>(j) * a[j] * r[m - j];
    r[m] = acc / static_cast<double>(m);
  }
  return r;
}

// Principal branch.
inline Jet log(const Jet& a) {
  if (std::abs(a.value()) <= kEpsDiv)
    raise(Errc::division_near_zero,
          "jet log at |c0| = " + std::to_string(std::abs(a.value())));
  Jet r(a.order());
  r[0] = std::log(a[0]);
  for (int m = 1; m <= a.order(); ++m) {
    Cx acc = static_cast<double>(m) * a[m];
    for (int j = 1; j < m; ++j) acc -= static_cast<double>(j) * r[j] * a[m - j];
    r[m] = acc / (static_cast<double>(m) * a[0]);
  }
  return r;
}

inline Jet pow_int(const Jet& a, int n) {
  if (n < 0) return recip(pow_int(a, -n));
  Jet r = Jet::constant(Cx(1.0), a.order());
  Jet base = a;
  int e = n;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

// Jet of the derivative function: one order lower, coefficients shifted.
inline Jet jet_derivative(const Jet& a) {
  if (a.order() < 1)
    raise(Errc::invalid_parameter, "cannot differentiate an order-0 jet");
  Jet r(a.order() - 1);
  for (int m = 0; m < a.order(); ++m) r[m] = static_cast<double>(m + 1) * a[m + 1];
  return r;
}

}  // namespace harmlab
