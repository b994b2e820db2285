#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace fdivergence {

struct NelderMeadOptions {
  std::size_t max_evaluations = 4000;
  /// Stop when the spread of simplex values falls below this.
  double value_tolerance = 1e-14;
  double initial_step = 1.0;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Minimizes `fn` with the reflection / expansion / contraction / shrink
/// simplex method. `fn` may return +inf for infeasible points.
NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& fn,
                                      std::vector<double> x0,
                                      const NelderMeadOptions& options = {});

}  // namespace fdivergence
