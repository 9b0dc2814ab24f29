#include <gtest/gtest.h>

#include <random>

#include "atomforce/ladder.hpp"
#include "oracles.hpp"

using namespace atomforce::ladder;

namespace {

TrigSeries random_series(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9), zp(-3, 3), wp(0, 3), kind(0, 2), freq(1, 3);
  TrigSeries s;
  for (int i = 0; i < 5; ++i) {
    const int k = kind(rng);
    const Rational c(coeff(rng), 1 + std::abs(coeff(rng)));
    if (k == 0) s = s + TrigSeries::constant(c, wp(rng), zp(rng));
    if (k == 1) s = s + TrigSeries::cos(freq(rng), c, wp(rng), zp(rng));
    if (k == 2) s = s + TrigSeries::sin(freq(rng), c, wp(rng), zp(rng));
  }
  return s;
}

}  // namespace

TEST(TrigSeries, CanonicalFormMergesAndDropsZeros) {
  const auto a = TrigSeries::cos(2, 3, 1, 1) + TrigSeries::cos(2, -3, 1, 1);
  EXPECT_TRUE(a.is_zero());
  const auto b = TrigSeries::sin(1, 2) + TrigSeries::sin(1, 5);
  ASSERT_EQ(b.terms().size(), 1u);
  EXPECT_EQ(b.terms()[0].coeff, 7);
  EXPECT_TRUE(TrigSeries::sin(0, 4).is_zero());
  EXPECT_EQ(TrigSeries::cos(0, 4), TrigSeries::constant(4));
}

TEST(TrigSeries, ProductToSumIdentity) {
  // 1 - 2 sin^2(wz) = cos(2wz)
  const auto s = TrigSeries::sin(1);
  EXPECT_TRUE(series_equal(TrigSeries::constant(1) - Rational(2) * (s * s), TrigSeries::cos(2)));
  // sin(a) cos(a) = sin(2a)/2 carries only multipliers {0, 2}
  const auto p = TrigSeries::sin(1, 1, 0, -1) * TrigSeries::cos(1, 1, 0, -1);
  for (const auto& t : p.terms()) EXPECT_TRUE(t.freq == 0 || t.freq == 2);
  EXPECT_EQ(p, TrigSeries::sin(2, Rational(1, 2), 0, -2));
}

TEST(TrigSeries, ProductMatchesNumericSampling) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng), b = random_series(rng);
    const auto ab = a * b;
    const double w = u(rng), z = u(rng);
    const double expect = a.evaluate<double>(w, z) * b.evaluate<double>(w, z);
    EXPECT_NEAR(ab.evaluate<double>(w, z), expect, 1e-10 * (1 + std::abs(expect)));
  }
}

TEST(TrigSeries, ExactEqualityHasNoTolerance) {
  const auto a = TrigSeries::cos(2, 3, 1, 1);
  const auto b = a + TrigSeries::cos(2, Rational(1, 1) / boost::multiprecision::pow(boost::multiprecision::cpp_int(10), 30));
  EXPECT_TRUE(series_equal(a, a));
  EXPECT_FALSE(series_equal(a, b));
}

TEST(LadderApply, ElementaryCases) {
  EXPECT_EQ(ladder_apply(TrigSeries::constant(1, 0, 2), 1), TrigSeries::constant(2));
  // (1/z) d/dz [cos(wz)/z] = -w sin(wz)/z^2 - cos(wz)/z^3
  const auto expect = TrigSeries::sin(1, -1, 1, -2) + TrigSeries::cos(1, -1, 0, -3);
  EXPECT_EQ(ladder_apply(TrigSeries::cos(1, 1, 0, -1), 1), expect);
  EXPECT_EQ(ladder_apply(TrigSeries::cos(1), 0), TrigSeries::cos(1));
  EXPECT_THROW(ladder_apply(TrigSeries::cos(1), -1), atomforce::DomainError);
}

TEST(LadderApply, CompositionAndLinearity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_series(rng), b = random_series(rng);
    EXPECT_EQ(ladder_apply(ladder_apply(a, 1), 1), ladder_apply(a, 2));
    EXPECT_EQ(ladder_apply(a + b, 3), ladder_apply(a, 3) + ladder_apply(b, 3));
  }
}

TEST(LadderApply, MatchesFiniteDifferences) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.5, 2.5);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_series(rng);
    const double w = u(rng), z = u(rng);
    const double exact = ladder_apply(s, 1).evaluate<double>(w, z);
    const double fd = oracle::ladder_fd([&](double zz) { return s.evaluate<double>(w, zz); }, z, 1e-5);
    EXPECT_NEAR(exact, fd, 1e-6 * (1 + std::abs(exact)));
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(FcIntegrand, ReproducesReferencePolynomial) {
  const auto d = derive_fc_integrand();
  EXPECT_TRUE(d.matched);
  EXPECT_EQ(d.placement, BracketPlacement::post_differentiation);
  EXPECT_TRUE(d.mismatch.empty());
  // written out term by term
  const auto expect = TrigSeries::cos(2, 18, 1, 1) + TrigSeries::cos(2, -8, 3, 3) + TrigSeries::cos(2, 1, 5, 5) +
                      TrigSeries::sin(2, -9) + TrigSeries::sin(2, 16, 2, 2) + TrigSeries::sin(2, -3, 4, 4);
  EXPECT_EQ(d.derived, expect);
}

TEST(FcIntegrand, ParityOfHarmonics) {
  const auto d = derive_fc_integrand();
  for (const auto& t : d.derived.terms()) {
    EXPECT_EQ(t.freq, 2u);
    EXPECT_EQ(t.wpow, t.zpow);
    EXPECT_EQ(t.zpow % 2, t.kind == TrigKind::cosine ? 1 : 0);
  }
}

TEST(FcIntegrand, SmallArgumentSeries) {
  const auto series = expand_about_zero(derive_fc_integrand().derived, 11);
  // P(x) = -11/15 x^5 - 46/105 x^7 + 86/315 x^9 - 284/6237 x^11
  EXPECT_EQ(series.size(), 4u);
  EXPECT_EQ(series.at({5, 5}), Rational(-11, 15));
  EXPECT_EQ(series.at({7, 7}), Rational(-46, 105));
  EXPECT_EQ(series.at({9, 9}), Rational(86, 315));
  EXPECT_EQ(series.at({11, 11}), Rational(-284, 6237));
  EXPECT_NEAR(static_cast<double>(series.at({5, 5})), oracle::P5, 1e-16);
}

TEST(FcIntegrand, TamperedTargetIsIsolated) {
  FcTargetCoefficients t;
  t.cos_part[2] = 2;
  const auto d = derive_fc_integrand(t);
  EXPECT_FALSE(d.matched);
  ASSERT_EQ(d.mismatch.size(), 1u);
  EXPECT_EQ(d.mismatch[0].side, "coefficient");
  EXPECT_EQ(d.mismatch[0].term.zpow, 5);
  EXPECT_EQ(d.mismatch[0].term.coeff, -1);
}

TEST(FcIntegrand, AlternatePlacementDiffers) {
  EXPECT_FALSE(series_equal(fc_ladder_sum(BracketPlacement::inside_z2_ladder).shifted(0, 8), fc_target_integrand()));
}

TEST(EntKernel, LeadingSeries) {
  const auto k = derive_ent_kernel(TrigSeries::cos(1));
  const auto s = expand_about_zero(k, 4);
  EXPECT_EQ(s.at({-2, 2}), 1);
  EXPECT_EQ(s.at({0, 4}), Rational(1, 2));
  EXPECT_EQ(s.at({2, 6}), Rational(-1, 8));
  EXPECT_EQ(s.at({4, 8}), Rational(1, 144));
  for (const auto& [key, c] : s) EXPECT_GE(key.first, -2);
}

TEST(EntKernel, ZeroAndDecay) {
  EXPECT_TRUE(derive_ent_kernel(TrigSeries()).is_zero());
  const auto k = derive_ent_kernel(TrigSeries::cos(1));
  for (const auto& t : k.terms()) EXPECT_LE(t.zpow, -1);
  double prev = 1e300;
  for (double z : {1e2, 1e3, 1e4, 1e5}) {
    // envelope of |K| at w = 1 falls like 1/z
    double peak = 0;
    for (int i = 0; i < 64; ++i) peak = std::max(peak, std::abs(k.evaluate<double>(1.0, z + i * 0.1)));
    EXPECT_LT(peak, prev);
    prev = peak;
  }
}

TEST(EntKernel, MatchesFiniteDifferences) {
  const auto k = derive_ent_kernel(TrigSeries::cos(1));
  const double w = 1.3;
  auto g = [&](double z) { return std::cos(w * z) / z; };
  for (double z : {0.7, 1.1, 2.3}) {
    const double fd = oracle::ent_kernel_fd(g, z, 2e-3);
    EXPECT_NEAR(k.evaluate<double>(w, z), fd, 1e-4 * std::abs(fd) + 1e-6);
  }
}

TEST(TrigSeries, TextForm) {
  const auto s = TrigSeries::cos(2, 18, 1, 1) + TrigSeries::sin(2, -9);
  EXPECT_EQ(s.to_string(), "-9 w^0 z^0 sin(2wz)\n+18 w^1 z^1 cos(2wz)\n");
  EXPECT_EQ(TrigSeries().to_string(), "0\n");
}
