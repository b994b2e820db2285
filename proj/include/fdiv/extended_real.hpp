#pragma once

#include <cmath>
#include <compare>
#include <iosfwd>
#include <limits>
#include <string>

#include "fdiv/errors.hpp"

namespace fdivergence {

/// A real number or +/-infinity. Never NaN: every operation that would
/// produce NaN throws NumericalError instead. The product 0 * inf is 0.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  ExtReal(double v) : v_(checked(v)) {}  // NOLINT(google-explicit-constructor)

  static ExtReal infinity() { return ExtReal(std::numeric_limits<double>::infinity()); }
  static ExtReal neg_infinity() { return ExtReal(-std::numeric_limits<double>::infinity()); }

  [[nodiscard]] double value() const { return v_; }
  [[nodiscard]] bool is_finite() const { return std::isfinite(v_); }
  [[nodiscard]] bool is_pos_inf() const { return v_ == std::numeric_limits<double>::infinity(); }
  [[nodiscard]] bool is_neg_inf() const { return v_ == -std::numeric_limits<double>::infinity(); }

  /// Finite value, or throws NumericalError.
  [[nodiscard]] double finite() const;

  friend ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.v_ + b.v_); }
  friend ExtReal operator-(ExtReal a, ExtReal b) { return ExtReal(a.v_ - b.v_); }
  friend ExtReal operator-(ExtReal a) { return ExtReal(-a.v_); }
  friend ExtReal operator*(ExtReal a, ExtReal b) {
    if (a.v_ == 0.0 || b.v_ == 0.0) return ExtReal(0.0);
    return ExtReal(a.v_ * b.v_);
  }
  friend ExtReal operator/(ExtReal a, ExtReal b);

  ExtReal& operator+=(ExtReal o) { return *this = *this + o; }
  ExtReal& operator*=(ExtReal o) { return *this = *this * o; }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend std::partial_ordering operator<=>(ExtReal a, ExtReal b) { return a.v_ <=> b.v_; }

 private:
  static double checked(double v);

  double v_ = 0.0;
};

ExtReal max(ExtReal a, ExtReal b);
ExtReal min(ExtReal a, ExtReal b);

/// "inf", "-inf" or the shortest round-tripping decimal.
std::string to_string(ExtReal x);
/// Inverse of to_string; also accepts "+inf"/"infinity". Throws ValidationError.
ExtReal parse_ext_real(const std::string& text);

std::ostream& operator<<(std::ostream& os, ExtReal x);

}  // namespace fdivergence
