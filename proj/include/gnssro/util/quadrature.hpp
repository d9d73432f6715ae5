#pragma once

#include <functional>

namespace gnssro::util {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |last doubling difference|
  int panels = 0;
};

/// Composite 20-point Gauss-Legendre integration of f over [a, b] with
/// panel doubling until the doubling difference drops below
/// rel_tol*|I| + abs_tol (or max_panels is reached).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-9, double abs_tol = 1e-15,
                           int max_panels = 1 << 12);

}  // namespace gnssro::util
