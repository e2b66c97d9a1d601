#pragma once

// Thin panel-integration helpers over Boost's Gauss-Kronrod rules.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <span>
#include <sstream>
#include <string>

#include "padeloc/errors.hpp"

namespace padeloc::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive 31-point Gauss-Kronrod over [a, b]. Throws NumericalError when
/// the estimated error exceeds `tol * max(1, |value|)`.
template <class F>
Result integrate(F&& f, double a, double b, double tol = 1e-12, unsigned max_depth = 20) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, max_depth, tol, &err);
  if (!std::isfinite(v) || err > 100.0 * tol * std::max(1.0, std::abs(v))) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge: value " << v
        << ", error estimate " << err;
    throw NumericalError(msg.str());
  }
  return {v, err};
}

/// Sum of adaptive integrals over consecutive panels [x_k, x_{k+1}].
template <class F>
Result integrate_panels(F&& f, std::span<const double> breaks, double tol = 1e-12) {
  Result total;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const auto r = integrate(f, breaks[k], breaks[k + 1], tol);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

/// Fixed 30-point Gauss-Legendre on one panel, for smooth integrands where
/// adaptive refinement only costs time.
template <class F>
double gauss_legendre(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

}  // namespace padeloc::quad
