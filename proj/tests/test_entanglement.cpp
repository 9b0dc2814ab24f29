#include <gtest/gtest.h>

#include "atomforce/dispersion_forces.hpp"
#include "atomforce/entanglement_forces.hpp"
#include "oracles.hpp"

using namespace atomforce;
namespace ent = atomforce::entanglement;

namespace {

PairConfig squeezed_pair(double a, double b) {
  PairConfig p;
  p.atom1 = p.atom2 = {0.4, 1.5, 2.0, 1.0};
  p.squeeze = SqueezeState::isotropic_state(a, b);
  return p;
}

double amplitude(double a, double b, double muw) {
  return (b * b - 1 / (a * a)) * (a * a / (b * b) - 1 / (muw * muw)) / 8;
}

}  // namespace

TEST(Kernel, Amplitude) {
  const auto k = ent::EntanglementKernel::from(SqueezeState::isotropic_state(0.7, 1.9), {0.4, 1.5, 2.0, 1.0});
  for (double v : k.amplitude) EXPECT_NEAR(v, amplitude(0.7, 1.9, 3.0), 1e-15);
}

TEST(Kernel, TildeParametrisation) {
  const AtomSpec atom{0.4, 1.5, 2.0, 1.0};
  const auto s = ent::squeeze_from_tilde({1.2, 1.2, 1.2}, {0.6, 0.6, 0.6}, atom);
  const auto k = ent::EntanglementKernel::from(s, atom);
  EXPECT_NEAR(k.amplitude[0] / (ent::tilde_factor(1.2, 0.6) / (8 * 3.0)), 1.0, 1e-13);
}

TEST(Kernel, LongTimeCorrelator) {
  const AtomSpec atom{0.4, 1.5, 2.0, 1.0};
  const auto g = ent::g_ent_longtime(SqueezeState::isotropic_state(0.7, 1.9), atom, atom, 0.9);
  EXPECT_NEAR(g[1], amplitude(0.7, 1.9, 3.0) * std::cos(1.8), 1e-15);
  AtomSpec other = atom;
  other.omega = 2.1;
  EXPECT_THROW(ent::g_ent_longtime(SqueezeState::isotropic_state(0.7, 1.9), atom, other, 0.9), UnsupportedError);
}

TEST(Isotropic, MatchesFiniteDifferenceLadder) {
  const auto p = squeezed_pair(0.7, 1.9);
  const double w = p.atom1.omega, A = amplitude(0.7, 1.9, 3.0);
  auto g = [&](double z) { return A * std::cos(w * z) / z; };
  for (double z : {0.6, 1.3}) {
    const double expect = -(0.16 / (4 * oracle::pi)) * oracle::ent_kernel_fd(g, z, 2e-3);
    EXPECT_NEAR(ent::f_ent_isotropic(p.at(z)) / expect, 1.0, 1e-4);
  }
}

TEST(Isotropic, NearFieldLimitAndConstantTerm) {
  const auto p = squeezed_pair(0.7, 1.9);
  const double w = p.atom1.omega, A = amplitude(0.7, 1.9, 3.0), pref = -0.16 / (4 * oracle::pi);
  const auto q = p.at(1e-2 / w);
  EXPECT_NEAR(ent::f_ent_isotropic(q) / ent::f_ent_nearfield(q), 1.0, 1e-2);
  EXPECT_NEAR(ent::f_ent_nearfield(q) / (pref * A * w * w / (q.z * q.z)), 1.0, 1e-14);
  // f - f_near -> pref A Omega^4 / 2 as z -> 0
  const auto r = p.at(1e-3 / w);
  const double constant = ent::f_ent_isotropic(r) - ent::f_ent_nearfield(r);
  EXPECT_NEAR(constant / (pref * A * std::pow(w, 4) / 2), 1.0, 1e-4);
}

TEST(Isotropic, OneOverZFarTail) {
  const auto p = squeezed_pair(0.7, 1.9);
  // leading far term is pref * A * Omega^3 sin(Omega z) / z
  const double w = p.atom1.omega, A = amplitude(0.7, 1.9, 3.0), pref = -0.16 / (4 * oracle::pi);
  const double z = (oracle::pi / 2 + 2 * oracle::pi * 3000) / w;  // sin(Omega z) = 1
  EXPECT_NEAR(ent::f_ent_isotropic(p.at(z)) / (pref * A * std::pow(w, 3) * std::sin(w * z) / z), 1.0, 1e-3);
}

TEST(Isotropic, Preconditions) {
  auto p = squeezed_pair(0.7, 1.9);
  p.squeeze.reset();
  EXPECT_THROW(ent::f_ent_isotropic(p), ConfigError);
  p = squeezed_pair(0.7, 1.9);
  p.squeeze->alpha[2] = 0.8;
  EXPECT_THROW(ent::f_ent_nearfield(p), ConfigError);
  EXPECT_NO_THROW(ent::f_ent_anisotropic(p));
  p = squeezed_pair(0.7, 1.9);
  p.atom2.mu = 1.6;
  EXPECT_THROW(ent::f_ent_isotropic(p), UnsupportedError);
}

TEST(Anisotropic, IsotropicStateGivesExactZero) {
  for (double a : {0.3, 0.7, 1.9}) {
    for (double b : {0.4, 1.1, 2.6}) EXPECT_EQ(ent::f_ent_anisotropic(squeezed_pair(a, b).at(0.1)), 0.0);
  }
}

TEST(Anisotropic, SignFlipAndHandValue) {
  const std::array<double, 3> d{0.3, -0.1, 0.7};
  const std::array<double, 3> neg{-0.3, 0.1, -0.7};
  const double f = ent::f_ent_anisotropic(0.4, 0.5, d, 0.2);
  EXPECT_EQ(ent::f_ent_anisotropic(0.4, 0.5, neg, 0.2), -f);
  EXPECT_NEAR(f, -3 * 0.2 / (4 * oracle::pi) * (0.3 - 0.1 - 1.4) / 0.0016, 1e-12);
}

TEST(Anisotropic, ConjugateSqueezeFlipsSign) {
  // with mu Omega = 1, (alpha, beta) -> (1/beta, 1/alpha) negates each amplitude
  PairConfig p;
  p.atom1 = p.atom2 = {0.4, 0.5, 2.0, 1.0};
  SqueezeState s;
  s.alpha = {0.7, 1.3, 0.9};
  s.beta_sq = {1.9, 0.8, 1.5};
  SqueezeState c;
  for (int j = 0; j < 3; ++j) {
    c.alpha[j] = 1 / s.beta_sq[j];
    c.beta_sq[j] = 1 / s.alpha[j];
  }
  p.squeeze = s;
  const double f = ent::f_ent_anisotropic(p.at(0.3));
  p.squeeze = c;
  EXPECT_NEAR(ent::f_ent_anisotropic(p.at(0.3)) / f, -1.0, 1e-13);
}

TEST(Entanglement, ChargeScaling) {
  auto p = squeezed_pair(0.7, 1.9).at(0.4);
  const double iso = ent::f_ent_isotropic(p), near = ent::f_ent_nearfield(p);
  p.atom1.q *= 2;
  p.atom2.q *= 2;
  EXPECT_EQ(ent::f_ent_isotropic(p), 4 * iso);
  EXPECT_EQ(ent::f_ent_nearfield(p), 4 * near);
}

TEST(Entanglement, SelectableThroughTotalForce) {
  const auto p = squeezed_pair(0.7, 1.9).at(0.4);
  forces::ComponentSelection s;
  s.entanglement = true;
  s.entanglement_form = forces::EntanglementForm::isotropic_nearfield;
  const auto b = forces::total_force(p, s);
  EXPECT_EQ(b.f_ent->method, Method::asymptotic);
  EXPECT_EQ(b.total, ent::f_ent_nearfield(p));
}
