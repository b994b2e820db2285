#include <gtest/gtest.h>

#include <cmath>

#include "fdiv/kappa.hpp"
#include "oracles.hpp"

namespace fdivergence {

namespace {
double oracle_sup(const std::string& f, const std::string& g, double lo = 1e-9, double hi = 1e9) {
  return oracle::grid_sup([&](double t) { return oracle::gen(f, t); },
                          [&](double t) { return oracle::gen(g, t); }, 1000001, lo, hi);
}
}  // namespace

TEST(Kappa, PointwiseRatio) {
  EXPECT_NEAR(kappa_at(builtin("kl"), builtin("chi2"), 3.0).value(),
              (3.0 * std::log(3.0) - 2.0) / 4.0, 1e-15);
  EXPECT_THROW(kappa_at(builtin("kl"), builtin("chi2"), 1.0), DomainError);
  EXPECT_THROW(kappa_at(builtin("kl"), builtin("marton_s"), 2.0), DominationHypothesisError);
}

TEST(Kappa, KnownSuprema) {
  const KappaExtremum a = kappa_sup(builtin("kl"), builtin("chi2"));
  EXPECT_NEAR(a.value.value(), 1.0, 1e-6);
  EXPECT_EQ(a.witness.kind, KappaWitness::Kind::zero);

  const KappaExtremum m = kappa_sup(builtin("marton_s"), builtin("tv"));
  EXPECT_NEAR(m.value.value(), 1.0, 1e-8);

  EXPECT_TRUE(kappa_sup(builtin("reverse_kl"), builtin("kl")).value.is_pos_inf());
  EXPECT_TRUE(kappa_sup(builtin("tv"), builtin("chi2")).value.is_pos_inf());
  EXPECT_TRUE(kappa_sup(builtin("chi2"), builtin("kl")).value.is_pos_inf());
  EXPECT_TRUE(kappa_sup(builtin("kl"), builtin("tv")).value.is_pos_inf());
}

TEST(Kappa, InteriorSupremumAgainstGrid) {
  // reverse_chi2 / reverse_kl peaks at an interior point on (0, 1)?  Use the
  // grid to decide; the library must agree either way.
  for (auto [f, g] : {std::pair{"marton_s", "chi2"}, std::pair{"marton_s", "kl"},
                      std::pair{"marton_s", "reverse_kl"}, std::pair{"kl", "chi2"},
                      std::pair{"reverse_kl", "reverse_chi2"}, std::pair{"tv", "tv"}}) {
    const KappaExtremum k = kappa_sup(builtin(f), builtin(g));
    ASSERT_TRUE(k.value.is_finite()) << f << "/" << g;
    const double want = oracle_sup(f, g);
    EXPECT_NEAR(k.value.value(), want, 1e-4 * std::max(1.0, want)) << f << "/" << g;
    EXPECT_GE(k.value.value(), want - 1e-12) << f << "/" << g;
  }
}

TEST(Kappa, LimitsAtOne) {
  auto [l, r] = kappa_limits_at_one(builtin("kl"), builtin("chi2"));
  EXPECT_DOUBLE_EQ(l.value(), 0.5);
  EXPECT_DOUBLE_EQ(r.value(), 0.5);
  std::tie(l, r) = kappa_limits_at_one(builtin("kl"), builtin("reverse_kl"));
  EXPECT_DOUBLE_EQ(l.value(), 1.0);
  EXPECT_DOUBLE_EQ(r.value(), 1.0);
  std::tie(l, r) = kappa_limits_at_one(builtin("marton_s"), builtin("chi2"));
  EXPECT_DOUBLE_EQ(l.value(), 1.0);
  EXPECT_DOUBLE_EQ(r.value(), 0.0);
  std::tie(l, r) = kappa_limits_at_one(builtin("tv"), builtin("chi2"));
  EXPECT_TRUE(l.is_pos_inf());
  EXPECT_TRUE(r.is_pos_inf());
}

TEST(Kappa, LimitsAtOneByExtrapolation) {
  // No derivative metadata: Hellinger-type generator against chi2 has limit 1/4.
  GeneratorTraits tr;
  tr.value_at_zero = 1.0;
  tr.star_at_zero = 1.0;
  const Generator h = Generator::custom(
      "hellinger", [](double t) { return (std::sqrt(t) - 1.0) * (std::sqrt(t) - 1.0); }, tr);
  const auto [l, r] = kappa_limits_at_one(h, builtin("chi2"));
  EXPECT_NEAR(l.value(), 0.25, 1e-7);
  EXPECT_NEAR(r.value(), 0.25, 1e-7);
}

TEST(Kappa, RestrictedWindow) {
  const double b1 = 0.5;
  const double b2 = 0.25;
  const KappaRange k = kappa_restricted(builtin("kl"), builtin("chi2"), b1, b2);
  // Brute force on the closed window [b2, 1/b1].
  auto kap = [](double t) { return oracle::gen("kl", t) / oracle::gen("chi2", t); };
  double hi = -1.0;
  double lo = 1e300;
  for (int i = 0; i <= 200000; ++i) {
    const double t = b2 + (1.0 / b1 - b2) * i / 200000.0;
    if (std::fabs(t - 1.0) < 1e-6) continue;
    hi = std::max(hi, kap(t));
    lo = std::min(lo, kap(t));
  }
  EXPECT_NEAR(k.sup.value.value(), hi, 1e-8);
  EXPECT_NEAR(k.inf.value.value(), lo, 1e-8);
  EXPECT_THROW(kappa_restricted(builtin("kl"), builtin("chi2"), 1.0, 0.5), DomainError);
  EXPECT_THROW(kappa_restricted(builtin("kl"), builtin("chi2"), 0.5, -0.1), DomainError);
}

TEST(Kappa, Profile) {
  const KappaProfile p = kappa_profile(builtin("kl"), builtin("reverse_kl"), 0.5, 0.5);
  EXPECT_TRUE(p.kappa_bar.is_pos_inf());
  EXPECT_DOUBLE_EQ(p.limit_left_1.value(), 1.0);
  EXPECT_DOUBLE_EQ(p.limit_right_1.value(), 1.0);
  EXPECT_NEAR(p.kappa_star_sup.value(), oracle::gen("kl", 2.0) / oracle::gen("reverse_kl", 2.0),
              1e-12);
  EXPECT_NEAR(p.kappa_star_inf.value(), oracle::gen("kl", 0.5) / oracle::gen("reverse_kl", 0.5),
              1e-12);
}

}  // namespace fdivergence
