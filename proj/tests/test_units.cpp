#include <gtest/gtest.h>

#include "atomforce/units.hpp"

namespace u = atomforce::units;

TEST(Units, LengthScale) {
  EXPECT_NEAR(u::to_internal_length(197.327), 1.0, 1e-6);
  EXPECT_NEAR(u::to_internal_length(197.3269804), 1.0, 1e-15);
}

TEST(Units, RejectsNonPositive) {
  EXPECT_THROW(u::to_internal_length(0.0), atomforce::DomainError);
  EXPECT_THROW(u::to_internal_length(-1.0), atomforce::DomainError);
  EXPECT_THROW(u::to_internal_inverse_temperature(0.0), atomforce::DomainError);
  EXPECT_THROW(u::to_internal_inverse_temperature(-5.0), atomforce::DomainError);
}

TEST(Units, RoundTrips) {
  for (double x : {1e-3, 0.5, 122.0, 7.7e4}) {
    EXPECT_NEAR(u::to_lab_length(u::to_internal_length(x)) / x, 1.0, 1e-12);
    EXPECT_NEAR(u::to_lab_temperature(u::to_internal_inverse_temperature(x)) / x, 1.0, 1e-12);
    EXPECT_NEAR(u::charge_to_lab(u::charge_to_internal(x)) / x, 1.0, 1e-12);
    EXPECT_NEAR(u::force_from_newtons(u::force_to_newtons(x)) / x, 1.0, 1e-12);
    EXPECT_NEAR(u::ordinary_frequency_to_energy(u::energy_to_ordinary_frequency(x)) / x, 1.0, 1e-12);
  }
}

TEST(Units, InverseTemperature) {
  // k_B = 8.617333262e-5 eV/K
  EXPECT_NEAR(u::to_internal_inverse_temperature(11604.5), 1.0, 1e-4);
  EXPECT_NEAR(u::to_internal_inverse_temperature(300.0), 1.0 / (8.617333262e-5 * 300.0), 1e-9);
  EXPECT_NEAR(u::to_internal_inverse_temperature(300.0), 38.68, 0.01);
}

TEST(Units, CouplingIsHeavisideLorentz) {
  const double q = u::charge_to_internal(1.0);
  EXPECT_NEAR(q * q / (4 * std::numbers::pi), 7.2973525693e-3, 1e-15);
}

TEST(Units, ForceFactor) {
  // 1 eV^2 = 1 eV / (hbar c / eV) = 1.602176634e-19 J / 1.973269804e-7 m
  EXPECT_NEAR(u::newtons_per_internal_force() / (1.602176634e-19 / 1.973269804e-7), 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(u::force_to_newtons(3.0), 3.0 * u::newtons_per_internal_force());
}

TEST(Units, HydrogenFrequencyReadings) {
  // 10 eV as an angular frequency is 1.52e16 rad/s; as ordinary it is 2.42e15 Hz.
  EXPECT_NEAR(u::energy_to_angular_frequency(10.0), 1.5193e16, 1e13);
  EXPECT_NEAR(u::energy_to_ordinary_frequency(10.0), 2.418e15, 1e12);
  EXPECT_NEAR(u::energy_to_ordinary_wavenumber_per_um(10.0), 8.07, 0.01);
  EXPECT_NEAR(u::energy_to_temperature(10.0), 1.16e5, 1e3);
}
