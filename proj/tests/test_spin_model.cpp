// Copyright 2026 The holotoric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "holotoric/spin_model.hpp"

namespace holotoric {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(HamiltonianDiagonal, SpecificValues) {
  const auto p = PhysicalParamsd::strict(2.0, 1.0, 0.0, 0.0, 1.0);
  const auto e = hamiltonian_diagonal(p);
  EXPECT_DOUBLE_EQ(e(0), 1.5);
  EXPECT_DOUBLE_EQ(e(1), 0.5);
  EXPECT_DOUBLE_EQ(e(2), -0.5);
  EXPECT_DOUBLE_EQ(e(3), -1.5);
}

TEST(HamiltonianDiagonal, ZeroSystemNeedsRelaxedConstructor) {
  EXPECT_THROW(PhysicalParamsd::strict(0, 0, 0, 0, 0), InvalidArgument);
  const auto p = PhysicalParamsd::relaxed(0, 0, 0, 0, 0);
  EXPECT_TRUE(hamiltonian_diagonal(p).isZero());
}

TEST(HamiltonianDiagonal, CouplingShiftsLevels) {
  // J enters as pi*J: (wi+wj+piJ)/2 etc.
  const auto e = hamiltonian_diagonal(PhysicalParamsd::strict(3.0, 1.0, 1.0, 0.0, 0.0));
  EXPECT_NEAR(e(0), (4.0 + kPi) / 2, 1e-15);
  EXPECT_NEAR(e(1), (2.0 - kPi) / 2, 1e-15);
  EXPECT_NEAR(e(2), (-2.0 - kPi) / 2, 1e-15);
  EXPECT_NEAR(e(3), (-4.0 + kPi) / 2, 1e-15);
}

TEST(PhysicalParams, RejectsInvalid) {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(PhysicalParamsd::strict(1.0, 2.0, 0, 0, 1), InvalidArgument);
  EXPECT_THROW(PhysicalParamsd::strict(1.0, 1.0, 0, 0, 1), InvalidArgument);
  EXPECT_THROW(PhysicalParamsd::relaxed(1.0, 2.0, 0, 0, 1), InvalidArgument);
  EXPECT_THROW(PhysicalParamsd::strict(inf, 1.0, 0, 0, 1), InvalidArgument);
  EXPECT_THROW(PhysicalParamsd::strict(2.0, 1.0, nan, 0, 1), InvalidArgument);
  EXPECT_THROW(PhysicalParamsd::strict(2.0, 1.0, 0, 0, -1e-3), InvalidArgument);
  EXPECT_NO_THROW(PhysicalParamsd::relaxed(1.0, 1.0, 0, 0, 0));
}

TEST(TransitionFrequencies, Values) {
  auto f = transition_frequencies(PhysicalParamsd::strict(10, 1, 0, 0, 1));
  EXPECT_EQ(f.plus, 10.0);
  EXPECT_EQ(f.minus, 10.0);
  f = transition_frequencies(PhysicalParamsd::strict(10, 1, 1, 0, 1));
  EXPECT_NEAR(f.plus, 10 + kPi, 1e-15);
  EXPECT_NEAR(f.minus, 10 - kPi, 1e-15);
}

TEST(BerryPhases, ZeroCouplingGivesNoShift) {
  for (double w : {0.0, 3.0, 10.0, 25.0}) {
    const auto r = berry_phases(PhysicalParamsd::strict(10, 1, 0, w, 2.0));
    EXPECT_EQ(r.shift, 0.0);
    EXPECT_EQ(r.phi_1, 0.0);
    EXPECT_EQ(r.phi_2, 0.0);
  }
}

TEST(BerryPhases, SymmetricResonance) {
  // omega = omega_i, J = 1, omega1 = pi: detunings are +pi and -pi, so
  // cos(theta+-) = +-1/sqrt(2) and the shift is pi*sqrt(2).
  const auto r = berry_phases(PhysicalParamsd::strict(10, 1, 1, 10, kPi));
  EXPECT_NEAR(r.cos_theta_plus, 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r.cos_theta_minus, -1 / std::sqrt(2.0), 1e-15);
  const double closed = 2 * kPi * kPi / std::sqrt(kPi * kPi + kPi * kPi);
  EXPECT_NEAR(r.shift, closed, 1e-12);
  EXPECT_NEAR(r.shift, 4.442882938158366, 1e-9);
  EXPECT_NEAR(r.phi_1, 2 * r.shift, 1e-15);
  EXPECT_EQ(r.phi_2, -r.phi_1);
}

TEST(BerryPhases, WeakDriveLimit) {
  // omega_- < omega < omega_+ with omega1 -> 0: cos -> +1 and -1.
  const auto r = berry_phases(PhysicalParamsd::strict(10, 1, 1, 10, 1e-9));
  EXPECT_NEAR(r.cos_theta_plus, 1.0, 1e-12);
  EXPECT_NEAR(r.cos_theta_minus, -1.0, 1e-12);
  EXPECT_NEAR(r.shift, 2 * kPi, 1e-6);
}

TEST(BerryPhases, DegenerateDrive) {
  // omega == omega_+ and omega1 == 0.
  EXPECT_THROW(berry_phases(PhysicalParamsd::strict(10, 1, 0, 10, 0)), DegenerateDrive);
  EXPECT_THROW(berry_phases(PhysicalParamsd::strict(10, 1, 1, 10 - kPi, 0)), DegenerateDrive);
  // Off resonance with zero amplitude is fine: cosines are exactly +-1.
  const auto r = berry_phases(PhysicalParamsd::strict(10, 1, 1, 10, 0));
  EXPECT_EQ(r.cos_theta_plus, 1.0);
  EXPECT_EQ(r.cos_theta_minus, -1.0);
}

TEST(BerryPhases, PropertySweep) {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> freq(-20, 20);
  std::uniform_real_distribution<double> coupling(-3, 3);
  std::uniform_real_distribution<double> amp(0.01, 10);
  for (int trial = 0; trial < 2000; ++trial) {
    const double wj = freq(rng);
    const double wi = wj + std::abs(freq(rng)) + 1e-3;
    const auto p = PhysicalParamsd::strict(wi, wj, coupling(rng), freq(rng), amp(rng));

    EXPECT_LT(std::abs(hamiltonian_diagonal(p).sum()), 1e-12);

    const auto f = transition_frequencies(p);
    EXPECT_NEAR((f.plus + f.minus) / 2, wi, 1e-12);

    const auto r = berry_phases(p);
    EXPECT_NEAR(r.gamma_plus + r.gamma_minus, r.shift, 1e-12);
    EXPECT_NEAR(r.gamma_plus, -kPi * (1 - r.cos_theta_plus), 1e-15);
    EXPECT_NEAR(r.gamma_minus, kPi * (1 - r.cos_theta_minus), 1e-15);
    EXPECT_LE(std::abs(r.shift), 2 * kPi);
    EXPECT_LE(std::abs(r.cos_theta_plus), 1.0);
    EXPECT_LE(std::abs(r.cos_theta_minus), 1.0);

    const auto negated = p.with_coupling(-p.coupling_j());
    const auto flipped = transition_frequencies(negated);
    EXPECT_EQ(flipped.plus, f.minus);
    EXPECT_EQ(flipped.minus, f.plus);
    EXPECT_NEAR(berry_phases(negated).shift, -r.shift, 1e-12);
  }
}

TEST(BerryPhases, CouplingSignAntisymmetryAtCentredDrive) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coupling(-3, 3);
  std::uniform_real_distribution<double> amp(0.01, 10);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = PhysicalParamsd::strict(12.5, 3.0, coupling(rng), 12.5, amp(rng));
    const auto a = berry_phases(p);
    const auto b = berry_phases(p.with_coupling(-p.coupling_j()));
    EXPECT_NEAR(b.shift, -a.shift, 1e-12);
  }
}

TEST(CPhaseGate, IdentityAtZeroPhase) {
  const auto g = DiagonalTwoQubitGated::from_phases(0, 0);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(g.entry(k), std::complex<double>(1, 0));
}

TEST(CPhaseGate, QuarterTurn) {
  const auto g = DiagonalTwoQubitGated::from_phases(kPi / 2, -kPi / 2);
  const std::complex<double> i(0, 1);
  EXPECT_LT(std::abs(g.entry(0) - i), 1e-15);
  EXPECT_LT(std::abs(g.entry(1) + i), 1e-15);
  EXPECT_LT(std::abs(g.entry(2) + i), 1e-15);
  EXPECT_LT(std::abs(g.entry(3) - i), 1e-15);
}

TEST(CPhaseGate, FromBerryPhasesIsUnitaryWithABBAPattern) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = berry_phases(PhysicalParamsd::strict(8, 2, u(rng), u(rng) + 6, u(rng)));
    const auto g = cphase_gate(r);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::norm(g.entry(k)), 1.0, 1e-12);
    EXPECT_EQ(g.entry(0), g.entry(3));
    EXPECT_EQ(g.entry(1), g.entry(2));
    EXPECT_LT(std::abs(g.agree() - std::polar(1.0, r.phi_1)), 1e-15);
    EXPECT_LT(std::abs(g.disagree() - std::polar(1.0, r.phi_2)), 1e-15);
    const Eigen::Matrix4cd m = g.matrix();
    EXPECT_TRUE((m.adjoint() * m).isIdentity(1e-12));
  }
}

TEST(CPhaseGate, FloatScalarInstantiates) {
  const auto p = PhysicalParams<float>::strict(10.f, 1.f, 1.f, 10.f, 3.14159265f);
  const auto r = berry_phases(p);
  EXPECT_NEAR(r.shift, 4.4428829f, 1e-5f);
  const auto g = cphase_gate(r);
  EXPECT_NEAR(std::abs(g.entry(0)), 1.0f, 1e-6f);
}

}  // namespace
}  // namespace holotoric
