#include "fdiv/generators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace fdivergence {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// t ln t + 1 - t, accurate for t near 1.
double relative_entropy_generator(double t) {
  const double u = t - 1.0;
  if (std::abs(u) < 0.5) return (1.0 + u) * std::log1p(u) - u;
  return t * std::log(t) + 1.0 - t;
}

// -ln t + t - 1, accurate for t near 1.
double reverse_relative_entropy_generator(double t) {
  const double u = t - 1.0;
  if (std::abs(u) < 0.5) return u - std::log1p(u);
  return -std::log(t) + t - 1.0;
}

double neg_log_generator(double t) {
  const double u = t - 1.0;
  if (std::abs(u) < 0.5) return -std::log1p(u);
  return -std::log(t);
}

std::optional<double> negate(const std::optional<double>& x) {
  if (!x) return std::nullopt;
  return -*x;
}

std::optional<double> add(const std::optional<double>& a, const std::optional<double>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

Generator Generator::custom(std::string name, Fn fn, GeneratorTraits traits) {
  Generator g;
  g.name_ = std::move(name);
  g.fn_ = std::move(fn);
  const double at_one = g.fn_(1.0);
  if (at_one != 0.0) {
    throw DomainError("generator '" + g.name_ + "' must satisfy f(1) = 0, got " +
                      std::to_string(at_one));
  }
  if (traits.value_at_zero) {
    g.value_at_zero_ = *traits.value_at_zero;
  } else {
    g.value_at_zero_ = g.fn_(1e-12);
    g.value_at_zero_estimated_ = true;
  }
  if (traits.star_at_zero) {
    g.star_at_zero_ = *traits.star_at_zero;
  } else {
    g.star_at_zero_ = g.fn_(1e12) / 1e12;
    g.star_at_zero_estimated_ = true;
  }
  if (g.value_at_zero_.is_neg_inf()) {
    throw DomainError("generator '" + g.name_ + "' has f(0) = -inf");
  }
  g.d1_left_ = traits.deriv_at_one_left;
  g.d1_right_ = traits.deriv_at_one_right;
  g.d2_left_ = traits.second_deriv_at_one_left;
  g.d2_right_ = traits.second_deriv_at_one_right;
  g.logarithmic_ = traits.logarithmic;
  return g;
}

double Generator::eval(double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("generator '" + name_ + "' evaluated outside (0, inf) at t = " +
                      std::to_string(t));
  }
  const double v = fn_(t);
  if (std::isnan(v)) throw NumericalError("generator '" + name_ + "' returned NaN");
  return v;
}

ExtReal Generator::eval_extended(double t) const {
  if (t == 0.0) return value_at_zero_;
  return eval(t);
}

std::optional<double> Generator::deriv_at_one() const {
  if (d1_left_ && d1_right_ && *d1_left_ == *d1_right_) return *d1_left_;
  return std::nullopt;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"kl",           "reverse_kl", "tv",     "chi2",
                                              "reverse_chi2", "marton_s",   "neg_log"};
  return names;
}

Generator builtin(std::string_view name) {
  Generator g;
  g.name_ = std::string(name);
  if (name == "kl") {
    g.fn_ = relative_entropy_generator;
    g.value_at_zero_ = 1.0;
    g.star_at_zero_ = kInf;
    g.d1_left_ = g.d1_right_ = 0.0;
    g.d2_left_ = g.d2_right_ = 1.0;
    g.logarithmic_ = true;
  } else if (name == "reverse_kl") {
    g.fn_ = reverse_relative_entropy_generator;
    g.value_at_zero_ = kInf;
    g.star_at_zero_ = 1.0;
    g.d1_left_ = g.d1_right_ = 0.0;
    g.d2_left_ = g.d2_right_ = 1.0;
    g.logarithmic_ = true;
  } else if (name == "tv") {
    g.fn_ = [](double t) { return std::abs(t - 1.0); };
    g.value_at_zero_ = 1.0;
    g.star_at_zero_ = 1.0;
    g.d1_left_ = -1.0;
    g.d1_right_ = 1.0;
  } else if (name == "chi2") {
    g.fn_ = [](double t) { return (t - 1.0) * (t - 1.0); };
    g.value_at_zero_ = 1.0;
    g.star_at_zero_ = kInf;
    g.d1_left_ = g.d1_right_ = 0.0;
    g.d2_left_ = g.d2_right_ = 2.0;
  } else if (name == "reverse_chi2") {
    g.fn_ = [](double t) { return (1.0 - t) * (1.0 - t) / t; };
    g.value_at_zero_ = kInf;
    g.star_at_zero_ = 1.0;
    g.d1_left_ = g.d1_right_ = 0.0;
    g.d2_left_ = g.d2_right_ = 2.0;
  } else if (name == "marton_s") {
    g.fn_ = [](double t) { return t < 1.0 ? (t - 1.0) * (t - 1.0) : 0.0; };
    g.value_at_zero_ = 1.0;
    g.star_at_zero_ = 0.0;
    g.d1_left_ = g.d1_right_ = 0.0;
    g.d2_left_ = 2.0;
    g.d2_right_ = 0.0;
  } else if (name == "neg_log") {
    g.fn_ = neg_log_generator;
    g.value_at_zero_ = kInf;
    g.star_at_zero_ = 0.0;
    g.d1_left_ = g.d1_right_ = -1.0;
    g.d2_left_ = g.d2_right_ = 1.0;
    g.logarithmic_ = true;
  } else {
    throw RegistryError("unknown generator '" + std::string(name) + "'");
  }
  return g;
}

Generator star(const Generator& f) {
  Generator g;
  g.name_ = "star(" + f.name_ + ")";
  g.fn_ = [fn = f.fn_](double t) { return t * fn(1.0 / t); };
  g.value_at_zero_ = f.star_at_zero_;
  g.star_at_zero_ = f.value_at_zero_;
  g.value_at_zero_estimated_ = f.star_at_zero_estimated_;
  g.star_at_zero_estimated_ = f.value_at_zero_estimated_;
  g.d1_left_ = negate(f.d1_right_);
  g.d1_right_ = negate(f.d1_left_);
  g.d2_left_ = f.d2_right_;
  g.d2_right_ = f.d2_left_;
  g.logarithmic_ = f.logarithmic_;
  return g;
}

Generator normalize_offset(const Generator& f) {
  if (!f.d1_left_ || !f.d1_right_) {
    throw NormalizationError("generator '" + f.name_ + "' has no derivative data at 1");
  }
  if (*f.d1_left_ != *f.d1_right_) {
    throw NormalizationError("generator '" + f.name_ + "' is not differentiable at 1");
  }
  const double d = *f.d1_left_;
  if (d == 0.0) return f;
  Generator g = f;
  g.name_ = "normalized(" + f.name_ + ")";
  g.fn_ = [fn = f.fn_, d](double t) { return fn(t) - d * (t - 1.0); };
  g.value_at_zero_ = f.value_at_zero_ + d;
  g.star_at_zero_ = f.star_at_zero_ - d;
  g.d1_left_ = g.d1_right_ = 0.0;
  return g;
}

Generator operator+(const Generator& f, const Generator& g) {
  Generator h;
  h.name_ = f.name_ + "+" + g.name_;
  h.fn_ = [a = f.fn_, b = g.fn_](double t) { return a(t) + b(t); };
  h.value_at_zero_ = f.value_at_zero_ + g.value_at_zero_;
  h.star_at_zero_ = f.star_at_zero_ + g.star_at_zero_;
  h.value_at_zero_estimated_ = f.value_at_zero_estimated_ || g.value_at_zero_estimated_;
  h.star_at_zero_estimated_ = f.star_at_zero_estimated_ || g.star_at_zero_estimated_;
  h.d1_left_ = add(f.d1_left_, g.d1_left_);
  h.d1_right_ = add(f.d1_right_, g.d1_right_);
  h.d2_left_ = add(f.d2_left_, g.d2_left_);
  h.d2_right_ = add(f.d2_right_, g.d2_right_);
  h.logarithmic_ = f.logarithmic_ || g.logarithmic_;
  return h;
}

Generator scale(const Generator& f, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("generator scale must be positive");
  Generator h = f;
  h.name_ = std::to_string(c) + "*" + f.name_;
  h.fn_ = [fn = f.fn_, c](double t) { return c * fn(t); };
  h.value_at_zero_ = ExtReal(c) * f.value_at_zero_;
  h.star_at_zero_ = ExtReal(c) * f.star_at_zero_;
  auto mul = [c](const std::optional<double>& x) -> std::optional<double> {
    if (!x) return std::nullopt;
    return c * *x;
  };
  h.d1_left_ = mul(f.d1_left_);
  h.d1_right_ = mul(f.d1_right_);
  h.d2_left_ = mul(f.d2_left_);
  h.d2_right_ = mul(f.d2_right_);
  return h;
}

ZeroValue value_at_zero(const Generator& f) {
  return {f.value_at_zero(), f.value_at_zero_estimated()};
}

ConvexityReport check_convexity(const Generator& f, std::size_t grid_size) {
  if (grid_size < 3) throw ValidationError("check_convexity needs grid_size >= 3");
  const double lo = std::log(1e-6);
  const double hi = std::log(1e6);
  std::vector<double> grid(grid_size);
  std::vector<double> values(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1));
    values[i] = f.eval(grid[i]);
  }
  ConvexityReport report;
  for (std::size_t i = 0; i < grid_size; ++i) {
    for (std::size_t step = 1; i + step < grid_size; step *= 2) {
      const double s = grid[i];
      const double t = grid[i + step];
      const double mid = 0.5 * (s + t);
      const double chord = 0.5 * (values[i] + values[i + step]);
      const double scale = std::max({1.0, std::abs(values[i]), std::abs(values[i + step])});
      if (f.eval(mid) > chord + 1e-10 * scale) {
        report.pass = false;
        report.witness = std::array<double, 3>{s, mid, t};
        return report;
      }
    }
  }
  return report;
}

}  // namespace fdivergence
