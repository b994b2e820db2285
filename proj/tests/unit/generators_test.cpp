#include <gtest/gtest.h>

#include <cmath>

#include "fdiv/generators.hpp"
#include "oracles.hpp"

namespace fdivergence {

TEST(Generators, BuiltinsMatchClosedForms) {
  for (const std::string& name : builtin_names()) {
    const Generator f = builtin(name);
    EXPECT_EQ(f.eval(1.0), 0.0) << name;
    for (double t : {1e-8, 0.01, 0.3, 0.999, 1.001, 2.0, 17.0, 1e6}) {
      const double want = oracle::gen(name, t);
      EXPECT_NEAR(f.eval(t), want, 1e-12 * std::max(1.0, std::fabs(want))) << name << " t=" << t;
    }
  }
}

TEST(Generators, StableNearOne) {
  // t log t - t + 1 ~ (t-1)^2/2 loses everything to cancellation when
  // computed naively at t = 1 + 1e-9.
  const Generator kl = builtin("kl");
  const double h = 1e-9;
  EXPECT_NEAR(kl.eval(1.0 + h) / (h * h / 2.0), 1.0, 1e-6);
  const Generator rkl = builtin("reverse_kl");
  EXPECT_NEAR(rkl.eval(1.0 - h) / (h * h / 2.0), 1.0, 1e-6);
}

TEST(Generators, BoundaryValues) {
  struct Row {
    const char* name;
    double f0;
    double fstar0;
  };
  const double inf = oracle::kInf;
  for (const Row& r : {Row{"kl", 1, inf}, Row{"reverse_kl", inf, 1}, Row{"tv", 1, 1},
                       Row{"chi2", 1, inf}, Row{"reverse_chi2", inf, 1}, Row{"marton_s", 1, 0},
                       Row{"neg_log", inf, 0}}) {
    const Generator f = builtin(r.name);
    EXPECT_EQ(f.value_at_zero(), ExtReal(r.f0)) << r.name;
    EXPECT_EQ(f.star_at_zero(), ExtReal(r.fstar0)) << r.name;
    EXPECT_FALSE(f.has_estimated_metadata());
    EXPECT_EQ(f.eval_extended(0.0), ExtReal(r.f0));
  }
}

TEST(Generators, UnknownNameThrows) {
  EXPECT_THROW(builtin("hellinger2"), RegistryError);
}

TEST(Generators, EvalRejectsNonPositive) {
  EXPECT_THROW((void)builtin("kl").eval(0.0), DomainError);
  EXPECT_THROW((void)builtin("kl").eval(-1.0), DomainError);
  EXPECT_THROW((void)builtin("kl").eval_extended(-1.0), DomainError);
}

TEST(Generators, StarIsPointwiseConjugate) {
  for (const std::string& name : builtin_names()) {
    const Generator f = builtin(name);
    const Generator fs = star(f);
    EXPECT_EQ(fs.value_at_zero(), f.star_at_zero()) << name;
    EXPECT_EQ(fs.star_at_zero(), f.value_at_zero()) << name;
    const Generator fss = star(fs);
    for (double t : {0.01, 0.5, 2.0, 50.0}) {
      EXPECT_NEAR(fs.eval(t), t * oracle::gen(name, 1.0 / t), 1e-12 * std::max(1.0, fs.eval(t)));
      EXPECT_NEAR(fss.eval(t), f.eval(t), 1e-12 * std::max(1.0, f.eval(t)));
    }
  }
  // kl and reverse_kl are conjugate up to the (t - 1) offset, which here is 0.
  const Generator s = star(builtin("kl"));
  for (double t : {0.1, 3.0}) EXPECT_NEAR(s.eval(t), builtin("reverse_kl").eval(t), 1e-14);
}

TEST(Generators, NormalizeOffset) {
  const Generator f = builtin("neg_log");
  ASSERT_TRUE(f.deriv_at_one().has_value());
  EXPECT_EQ(*f.deriv_at_one(), -1.0);
  const Generator n = normalize_offset(f);
  for (double t : {0.2, 1.5, 9.0}) EXPECT_NEAR(n.eval(t), -std::log(t) + t - 1.0, 1e-14);
  EXPECT_EQ(n.value_at_zero(), ExtReal::infinity());
  EXPECT_EQ(n.star_at_zero(), ExtReal(1.0));
  EXPECT_EQ(*n.deriv_at_one(), 0.0);
  // Already normalized: identity.
  EXPECT_EQ(normalize_offset(builtin("kl")).name(), "kl");
  // Kink at 1: no two-sided derivative.
  EXPECT_THROW(normalize_offset(builtin("tv")), NormalizationError);
}

TEST(Generators, CustomGenerator) {
  const Generator h = Generator::custom(
      "hellinger", [](double t) { return (std::sqrt(t) - 1.0) * (std::sqrt(t) - 1.0); });
  EXPECT_TRUE(h.value_at_zero_estimated());
  EXPECT_NEAR(h.value_at_zero().value(), 1.0, 1e-5);
  EXPECT_NEAR(h.star_at_zero().value(), 1.0, 1e-5);
  EXPECT_THROW(Generator::custom("bad", [](double t) { return t; }), DomainError);

  GeneratorTraits tr;
  tr.value_at_zero = 1.0;
  tr.star_at_zero = 1.0;
  const Generator h2 = Generator::custom(
      "hellinger", [](double t) { return (std::sqrt(t) - 1.0) * (std::sqrt(t) - 1.0); }, tr);
  EXPECT_FALSE(h2.has_estimated_metadata());
}

TEST(Generators, SumAndScale) {
  const Generator s = builtin("kl") + builtin("reverse_kl");
  const Generator c = scale(builtin("chi2"), 0.5);
  for (double t : {0.3, 4.0}) {
    EXPECT_NEAR(s.eval(t), oracle::gen("kl", t) + oracle::gen("reverse_kl", t), 1e-13);
    EXPECT_NEAR(c.eval(t), 0.5 * (t - 1) * (t - 1), 1e-14);
  }
  EXPECT_EQ(s.value_at_zero(), ExtReal::infinity());
  EXPECT_EQ(c.value_at_zero(), ExtReal(0.5));
  EXPECT_THROW(scale(builtin("kl"), -1.0), DomainError);
}

TEST(Generators, ConvexityCheck) {
  for (const std::string& name : builtin_names()) {
    EXPECT_TRUE(check_convexity(builtin(name), 257).pass) << name;
  }
  const Generator bad = Generator::custom("sin", [](double t) { return std::sin(t - 1.0); });
  const ConvexityReport r = check_convexity(bad, 257);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  const auto [s, m, t] = *r.witness;
  EXPECT_GT(bad.eval(m), 0.5 * (bad.eval(s) + bad.eval(t)));
}

}  // namespace fdivergence
