#include "fdiv/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "fdiv/errors.hpp"

namespace fdivergence {

namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& fn, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = fn(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double sum = fn(center - dx) + fn(center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) throw NumericalError("non-finite integrand value in quadrature");
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           std::span<const double> breakpoints, const QuadratureOptions& options) {
  if (!(a < b)) throw DomainError("integration interval must satisfy a < b");
  std::vector<double> edges{a};
  for (double x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Panel> panels;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = evaluate_panel(fn, edges[i], edges[i + 1]);
    value += p.value;
    error += p.error;
    panels.push(p);
  }
  while (error > options.abs_tolerance) {
    if (panels.size() >= options.max_panels) {
      throw NumericalError("quadrature did not converge: error estimate " + std::to_string(error) +
                           " after " + std::to_string(panels.size()) + " panels");
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(fn, worst.a, mid);
    Panel right = evaluate_panel(fn, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  QuadratureResult result;
  result.panels = panels.size();
  value = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  result.value = value;
  result.error_estimate = error;
  return result;
}

}  // namespace fdivergence
