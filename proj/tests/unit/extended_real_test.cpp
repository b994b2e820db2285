#include <gtest/gtest.h>

#include <sstream>

#include "fdiv/extended_real.hpp"

namespace fdivergence {

TEST(ExtReal, ZeroTimesInfinityIsZero) {
  EXPECT_EQ(ExtReal(0.0) * ExtReal::infinity(), ExtReal(0.0));
  EXPECT_EQ(ExtReal::neg_infinity() * ExtReal(0.0), ExtReal(0.0));
  EXPECT_TRUE((ExtReal(2.0) * ExtReal::infinity()).is_pos_inf());
  EXPECT_TRUE((ExtReal(-2.0) * ExtReal::infinity()).is_neg_inf());
}

TEST(ExtReal, IndeterminateFormsThrow) {
  EXPECT_THROW(ExtReal::infinity() - ExtReal::infinity(), NumericalError);
  EXPECT_THROW(ExtReal::infinity() + ExtReal::neg_infinity(), NumericalError);
  EXPECT_THROW(ExtReal(1.0) / ExtReal(0.0), NumericalError);
  EXPECT_THROW(ExtReal(std::nan("")), NumericalError);
}

TEST(ExtReal, Ordering) {
  EXPECT_LT(ExtReal(1e308), ExtReal::infinity());
  EXPECT_GT(ExtReal(-1e308), ExtReal::neg_infinity());
  EXPECT_EQ(max(ExtReal(3.0), ExtReal::infinity()), ExtReal::infinity());
  EXPECT_EQ(min(ExtReal(3.0), ExtReal::neg_infinity()), ExtReal::neg_infinity());
}

TEST(ExtReal, TextRoundTrip) {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1e-300, 6.02214076e23}) {
    EXPECT_EQ(parse_ext_real(to_string(ExtReal(v))), ExtReal(v)) << v;
  }
  EXPECT_EQ(to_string(ExtReal::infinity()), "inf");
  EXPECT_EQ(to_string(ExtReal::neg_infinity()), "-inf");
  EXPECT_TRUE(parse_ext_real("+inf").is_pos_inf());
  EXPECT_TRUE(parse_ext_real("infinity").is_pos_inf());
  EXPECT_THROW(parse_ext_real("nan"), ValidationError);
  EXPECT_THROW(parse_ext_real("1.5x"), ValidationError);
  std::ostringstream os;
  os << ExtReal::infinity();
  EXPECT_EQ(os.str(), "inf");
}

TEST(ExtReal, FiniteAccessor) {
  EXPECT_DOUBLE_EQ(ExtReal(4.0).finite(), 4.0);
  EXPECT_THROW((void)ExtReal::infinity().finite(), NumericalError);
}

}  // namespace fdivergence
