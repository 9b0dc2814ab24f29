#include <gtest/gtest.h>

#include "atomforce/dispersion_forces.hpp"
#include "atomforce/quadrature.hpp"
#include "oracles.hpp"

using namespace atomforce;
using quadrature::Real;

namespace {

PairConfig sample_pair() {
  PairConfig p;
  p.atom1 = {0.3, 1.0, 1.0, 1.0};
  p.atom2 = {0.25, 1.4, 1.7, 1.0};
  return p;
}

double cp_far(const PairConfig& p) {
  const double a1 = p.atom1.q * p.atom1.q / (4 * oracle::pi * p.atom1.mu * p.atom1.omega * p.atom1.omega);
  const double a2 = p.atom2.q * p.atom2.q / (4 * oracle::pi * p.atom2.mu * p.atom2.omega * p.atom2.omega);
  return -161 / (4 * oracle::pi) * a1 * a2 / std::pow(p.z, 8);
}

double coupling(const PairConfig& p) {
  return std::pow(p.atom1.q * p.atom2.q, 2) / (16 * oracle::pi * oracle::pi * p.atom1.mu * p.atom2.mu);
}

}  // namespace

TEST(PvIntegral, SymmetricWindowOfOddPole) {
  const auto r = quadrature::pv_integral([](Real w) { return 1 / (w - 2); }, {2.0}, 0.4, 1e-12, 1000, 1.5, 2.5);
  EXPECT_NEAR(r.value, 0.0, 1e-14);
  ASSERT_EQ(r.residues.size(), 1u);
  EXPECT_NEAR(r.residues[0], 1.0, 1e-12);
}

TEST(PvIntegral, NoPolesIsPlainQuadrature) {
  const auto r = quadrature::pv_integral([](Real w) { return std::exp(-w); }, {}, 0.1, 1e-10);
  EXPECT_NEAR(r.value, 1.0, 1e-10);
}

TEST(PvIntegral, RegulatedResonanceAgainstShrinkingWindow) {
  const double eta = 1e-3;
  auto f = [&](Real w) { return std::exp(-eta * w) / (1 - w * w); };
  const auto r = quadrature::pv_integral(f, {1.0}, 0.2, 1e-10);
  // brute force: exclude (1 - d, 1 + d) and let d shrink; the excluded part is O(d)
  auto excluded = [&](double d) {
    auto g = [&](double x) { return static_cast<double>(f(x)); };
    const double left = oracle::simpson(g, 0.0, 1.0 - d, 200000);
    double right = 0;
    for (double a = 1 + d, b = 2; a < 60000; a = b, b *= 2) right += oracle::simpson(g, a, b, 20000);
    return left + right;
  };
  const double e1 = excluded(2e-3), e2 = excluded(1e-3);
  const double brute = 2 * e2 - e1;  // remove the linear term in d
  EXPECT_NEAR(r.value, brute, 1e-4 * std::abs(brute));
  EXPECT_NEAR(r.residues[0], -0.5 * std::exp(-eta), 1e-8);
}

TEST(PvIntegral, LaplaceSelfTest) {
  // int_0^inf e^{-eta w} sin(2 w z) dw = 2 z / (eta^2 + 4 z^2)
  const double eta = 0.3, z = 1.7;
  const auto r = quadrature::pv_integral([&](Real w) { return std::exp(-eta * w) * std::sin(2 * w * z); }, {},
                                         0.1, 1e-10, 100000, 0.0, 200.0);
  EXPECT_NEAR(r.value, 2 * z / (eta * eta + 4 * z * z), 1e-9);
}

TEST(PvIntegral, UnstableResidueIsReported) {
  // an even double pole passes the symmetric residue stencil but has no principal value
  EXPECT_THROW(quadrature::pv_integral([](Real w) { return 1 / ((w - 1) * (w - 1)); }, {1.0}, 0.2), Error);
  // an odd second-order term spoils the Richardson agreement of the residue stencils
  EXPECT_THROW(quadrature::pv_integral([](Real w) { return 1 / (w - 1) + 1 / ((w - 1) * (w - 1) * (w - 1)); }, {1.0}, 0.2),
               Error);
}

TEST(PvIntegral, RejectsOverlappingWindows) {
  EXPECT_THROW(quadrature::pv_integral([](Real w) { return w; }, {1.0, 1.3}, 0.2), ConfigError);
}

TEST(Oracle, MatchesIndependentSimpson) {
  for (double s : {0.05, 0.5, 3.0, 40.0}) {
    const auto p = sample_pair().at(s);
    const double ref = oracle::wick_force(coupling(p), p.atom1.omega, p.atom2.omega, p.z);
    EXPECT_NEAR(quadrature::cp_imaginary_frequency_oracle(p) / ref, 1.0, 1e-8) << "Omega z = " << s;
  }
}

TEST(Oracle, NearFieldSevenPowerAndSymmetry) {
  const auto p = sample_pair().at(1e-4);
  const double r = quadrature::cp_imaginary_frequency_oracle(p.at(2e-4)) / quadrature::cp_imaginary_frequency_oracle(p);
  EXPECT_NEAR(r, std::pow(2.0, -7), 1e-3 * std::pow(2.0, -7));
  for (double s : {0.1, 2.0, 30.0}) {
    const auto q = sample_pair().at(s);
    EXPECT_NEAR(quadrature::cp_imaginary_frequency_oracle(q.swapped()) / quadrature::cp_imaginary_frequency_oracle(q),
                1.0, 1e-13);
  }
}

TEST(Oracle, FarFieldForm) {
  for (double s : {50.0, 100.0}) {
    const auto p = sample_pair().at(s);
    EXPECT_NEAR(quadrature::cp_imaginary_frequency_oracle(p) / cp_far(p), 1.0, 0.005) << s;
  }
}

TEST(Oracle, FiniteTemperatureUnsupported) {
  auto p = sample_pair();
  p.bath.beta = InverseTemperature::finite(5.0);
  EXPECT_THROW(quadrature::cp_imaginary_frequency_oracle(p), UnsupportedError);
}

TEST(IntegrateFc, AgreesWithOracleAcrossRegimes) {
  for (double s : {0.1, 0.25, 0.6, 1.5, 4.0, 10.0, 25.0, 50.0}) {
    const auto p = sample_pair().at(s);
    const auto r = quadrature::integrate_fc(p);
    EXPECT_NEAR(r.dissipative / quadrature::cp_imaginary_frequency_oracle(p), 1.0, 1e-4) << "Omega z = " << s;
  }
}

TEST(IntegrateFc, FarFieldMatchesCasimirPolder) {
  for (double s : {20.0, 50.0, 100.0}) {
    const auto p = sample_pair().at(s);
    EXPECT_NEAR(quadrature::integrate_fc(p).dissipative / cp_far(p), 1.0, 0.02) << s;
  }
}

TEST(IntegrateFc, LinesEqualIntrinsicPlusDeltaAtEquilibrium) {
  // The resonance lines carry exactly f_A + f_B + delta_f_C when all temperatures agree.
  for (double beta : {0.0, 0.8, 4.0}) {
    for (double s : {0.3, 3.0, 12.0}) {
      auto p = sample_pair().at(s);
      if (beta > 0) p.bath.beta = p.atom1.temperature = p.atom2.temperature = InverseTemperature::finite(beta);
      const auto r = quadrature::integrate_fc(p);
      const double sum = forces::f_A(p) + forces::f_B(p) + forces::delta_f_C(p);
      EXPECT_NEAR(r.resonance_lines / sum, 1.0, 1e-12);
      EXPECT_NEAR(r.principal_value + r.resonance_lines, r.dissipative, 1e-12 * std::abs(r.resonance_lines));
    }
  }
}

TEST(IntegrateFc, TemperatureContinuity) {
  auto p = sample_pair().at(2.0);
  const double t0 = quadrature::integrate_fc(p).dissipative;
  p.bath.beta = InverseTemperature::finite(1e3);
  EXPECT_NEAR(quadrature::integrate_fc(p).dissipative / t0, 1.0, 3e-6);
}

TEST(IntegrateFc, EtaLadderSettles) {
  const auto p = sample_pair().at(5.0);
  const auto r = quadrature::integrate_fc(p);
  const auto& v = r.diagnostics.rung_values;
  ASSERT_EQ(v.size(), 3u);
  EXPECT_LT(r.diagnostics.spread, 1e-6 * std::abs(r.dissipative));
  EXPECT_LT(std::abs(v[2] - r.dissipative), 1e-6 * std::abs(r.dissipative));
}

TEST(IntegrateFc, DoublingPanelBudgetIsStable) {
  const auto p = sample_pair().at(8.0);
  quadrature::QuadratureSpec a;
  a.max_panels = 2000;
  quadrature::QuadratureSpec b = a;
  b.max_panels = 4000;
  const double va = quadrature::integrate_fc(p, a).dissipative;
  const double vb = quadrature::integrate_fc(p, b).dissipative;
  EXPECT_NEAR(va / vb, 1.0, a.panel_tol);
}

TEST(IntegrateFc, ConfigurationErrors) {
  auto p = sample_pair();
  quadrature::QuadratureSpec s;
  s.pole_window = 0.2;  // limit is min(1, 1.7, 0.7)/4 = 0.175
  EXPECT_THROW(quadrature::integrate_fc(p, s), ConfigError);
  s.pole_window.reset();
  s.eta_ladder = {1e-3, 2e-3};
  EXPECT_THROW(quadrature::integrate_fc(p, s), ConfigError);
  p.atom2.omega = p.atom1.omega;
  EXPECT_THROW(quadrature::integrate_fc(p), DegeneracyError);
}

TEST(IntegrateFc, CoarseLadderIsFlagged) {
  // A regulator as large as the oscillation scale leaves a visible eta dependence.
  const auto p = sample_pair().at(0.2);
  quadrature::QuadratureSpec s;
  s.eta_ladder = {2.0, 1.0, 0.5};
  s.panel_tol = 1e-9;
  EXPECT_THROW(quadrature::integrate_fc(p, s), ConvergenceError);
}
