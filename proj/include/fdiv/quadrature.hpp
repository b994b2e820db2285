#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace fdivergence {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

struct QuadratureOptions {
  double abs_tolerance = 1e-9;
  std::size_t max_panels = 4000;
};

/// Adaptive 7/15-point Gauss-Kronrod integration over [a, b]. The panel with
/// the largest error estimate is bisected until the summed estimate drops
/// below abs_tolerance. `breakpoints` inside (a, b) seed the initial panels.
/// Throws NumericalError when max_panels is reached first.
QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           std::span<const double> breakpoints = {},
                           const QuadratureOptions& options = {});

}  // namespace fdivergence
