#include "fdiv/extended_real.hpp"

#include <charconv>
#include <ostream>

namespace fdivergence {

double ExtReal::checked(double v) {
  if (std::isnan(v)) throw NumericalError("extended-real operation produced NaN");
  return v;
}

double ExtReal::finite() const {
  if (!is_finite()) throw NumericalError("expected a finite value, got " + to_string(*this));
  return v_;
}

ExtReal operator/(ExtReal a, ExtReal b) {
  if (b.v_ == 0.0) throw NumericalError("extended-real division by zero");
  return ExtReal(a.v_ / b.v_);
}

ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }
ExtReal min(ExtReal a, ExtReal b) { return b < a ? b : a; }

std::string to_string(ExtReal x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x.value());
  return {buf, res.ptr};
}

ExtReal parse_ext_real(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return ExtReal::infinity();
  if (text == "-inf" || text == "-infinity") return ExtReal::neg_infinity();
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || std::isnan(v)) {
    throw ValidationError("not an extended real: '" + text + "'");
  }
  return v;
}

std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << to_string(x); }

}  // namespace fdivergence
