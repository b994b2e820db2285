#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdiv/extended_real.hpp"

namespace fdivergence {

/// Optional data attached to a user-defined generator. Limits that are left
/// empty are estimated numerically and flagged as such.
struct GeneratorTraits {
  std::optional<ExtReal> value_at_zero;
  std::optional<ExtReal> star_at_zero;
  std::optional<double> deriv_at_one_left;
  std::optional<double> deriv_at_one_right;
  std::optional<double> second_deriv_at_one_left;
  std::optional<double> second_deriv_at_one_right;
  /// True when the generator is expressed in log units (nats).
  bool logarithmic = false;
};

/// A convex function f on (0, inf) with f(1) = 0, plus the boundary data the
/// divergence and bound code needs: f(0) = lim_{t->0} f(t) and
/// f*(0) = lim_{u->inf} f(u)/u. Immutable once built.
class Generator {
 public:
  using Fn = std::function<double(double)>;

  /// Builds a user generator. Throws DomainError if fn(1) != 0.
  static Generator custom(std::string name, Fn fn, GeneratorTraits traits = {});

  /// f(t) for t > 0. Throws DomainError for t <= 0 or non-finite t.
  [[nodiscard]] double eval(double t) const;
  double operator()(double t) const { return eval(t); }

  /// f(t) for t >= 0, using the continuous extension at 0.
  [[nodiscard]] ExtReal eval_extended(double t) const;

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] ExtReal value_at_zero() const { return value_at_zero_; }
  [[nodiscard]] ExtReal star_at_zero() const { return star_at_zero_; }
  [[nodiscard]] bool value_at_zero_estimated() const { return value_at_zero_estimated_; }
  [[nodiscard]] bool star_at_zero_estimated() const { return star_at_zero_estimated_; }
  [[nodiscard]] bool has_estimated_metadata() const {
    return value_at_zero_estimated_ || star_at_zero_estimated_;
  }
  [[nodiscard]] const std::optional<double>& deriv_at_one_left() const { return d1_left_; }
  [[nodiscard]] const std::optional<double>& deriv_at_one_right() const { return d1_right_; }
  [[nodiscard]] const std::optional<double>& second_deriv_at_one_left() const { return d2_left_; }
  [[nodiscard]] const std::optional<double>& second_deriv_at_one_right() const { return d2_right_; }
  [[nodiscard]] bool logarithmic() const { return logarithmic_; }

  /// f'(1) when both one-sided derivatives are known and agree.
  [[nodiscard]] std::optional<double> deriv_at_one() const;

 private:
  friend Generator star(const Generator& f);
  friend Generator normalize_offset(const Generator& f);
  friend Generator operator+(const Generator& f, const Generator& g);
  friend Generator scale(const Generator& f, double c);
  friend Generator builtin(std::string_view name);

  Generator() = default;

  std::string name_;
  Fn fn_;
  ExtReal value_at_zero_;
  ExtReal star_at_zero_;
  bool value_at_zero_estimated_ = false;
  bool star_at_zero_estimated_ = false;
  std::optional<double> d1_left_, d1_right_;
  std::optional<double> d2_left_, d2_right_;
  bool logarithmic_ = false;
};

/// Names accepted by builtin(), in registry order.
const std::vector<std::string>& builtin_names();

/// kl, reverse_kl, tv, chi2, reverse_chi2, marton_s, neg_log.
/// Throws RegistryError for anything else.
Generator builtin(std::string_view name);

/// f*(t) = t f(1/t). Swaps f(0) and f*(0); star(star(f)) == f pointwise.
Generator star(const Generator& f);

/// f(t) - f'(1)(t - 1). Throws NormalizationError when the one-sided
/// derivatives at 1 are missing or differ. Returns f itself when f'(1) == 0.
Generator normalize_offset(const Generator& f);

/// Pointwise sum; D_{f+g} = D_f + D_g.
Generator operator+(const Generator& f, const Generator& g);

/// c * f for c > 0.
Generator scale(const Generator& f, double c);

struct ZeroValue {
  ExtReal value;
  bool estimated = false;
};

ZeroValue value_at_zero(const Generator& f);

struct ConvexityReport {
  bool pass = true;
  /// First violating (s, (s+t)/2, t), if any.
  std::optional<std::array<double, 3>> witness;
};

/// Midpoint convexity on a log-spaced grid over [1e-6, 1e6]. grid_size >= 3.
ConvexityReport check_convexity(const Generator& f, std::size_t grid_size);

}  // namespace fdivergence
