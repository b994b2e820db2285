#include "fdiv/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fdivergence {

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& fn,
                                      std::vector<double> x0, const NelderMeadOptions& options) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  const std::size_t n = x0.size();
  NelderMeadResult result;
  if (n == 0) {
    result.value = fn(x0);
    result.evaluations = 1;
    result.x = std::move(x0);
    return result;
  }

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> values(n + 1);
  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return fn(x);
  };
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto point_along = [&](double coeff, std::vector<double>& out, const std::vector<double>& worst) {
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + coeff * (centroid[j] - worst[j]);
  };

  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];
    if (std::isfinite(values[worst]) &&
        std::abs(values[worst] - values[best]) <= options.value_tolerance) {
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    point_along(kReflect, trial, simplex[worst]);
    const double f_reflect = eval(trial);
    if (f_reflect < values[best]) {
      point_along(kExpand, trial2, simplex[worst]);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second_worst]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    // Outside contraction when the reflection improved on the worst point.
    const bool outside = f_reflect < values[worst];
    point_along(outside ? kContract : -kContract, trial2, simplex[worst]);
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = f_contract;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[idx];
  result.value = values[idx];
  result.evaluations = evals;
  return result;
}

}  // namespace fdivergence
