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

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Core>

#include "holotoric/errors.hpp"

namespace holotoric {

/// Constants of the coupled two-spin system plus the rotating drive field.
///
/// Energies use hbar = 1. The coupling J enters every formula as pi*J.
/// Construction goes through `strict` (omega_i > omega_j, as the physical
/// model assumes) or `relaxed` (omega_i >= omega_j, for degenerate fixtures).
template <typename Scalar>
class PhysicalParams {
 public:
  static PhysicalParams strict(Scalar omega_i, Scalar omega_j, Scalar coupling_j,
                               Scalar drive_omega, Scalar drive_omega1) {
    PhysicalParams p(omega_i, omega_j, coupling_j, drive_omega, drive_omega1);
    if (!(omega_i > omega_j)) {
      throw InvalidArgument("omega_i must be strictly greater than omega_j");
    }
    return p;
  }

  static PhysicalParams relaxed(Scalar omega_i, Scalar omega_j, Scalar coupling_j,
                                Scalar drive_omega, Scalar drive_omega1) {
    PhysicalParams p(omega_i, omega_j, coupling_j, drive_omega, drive_omega1);
    if (!(omega_i >= omega_j)) {
      throw InvalidArgument("omega_i must not be smaller than omega_j");
    }
    return p;
  }

  Scalar omega_i() const { return omega_i_; }
  Scalar omega_j() const { return omega_j_; }
  Scalar coupling_j() const { return coupling_j_; }
  Scalar drive_omega() const { return drive_omega_; }
  Scalar drive_omega1() const { return drive_omega1_; }

  /// Same system with a different coupling J.
  PhysicalParams with_coupling(Scalar coupling_j) const {
    PhysicalParams p = *this;
    if (!std::isfinite(coupling_j)) throw InvalidArgument("coupling must be finite");
    p.coupling_j_ = coupling_j;
    return p;
  }

 private:
  PhysicalParams(Scalar omega_i, Scalar omega_j, Scalar coupling_j, Scalar drive_omega,
                 Scalar drive_omega1)
      : omega_i_(omega_i),
        omega_j_(omega_j),
        coupling_j_(coupling_j),
        drive_omega_(drive_omega),
        drive_omega1_(drive_omega1) {
    using std::isfinite;
    if (!isfinite(omega_i) || !isfinite(omega_j) || !isfinite(coupling_j) ||
        !isfinite(drive_omega) || !isfinite(drive_omega1)) {
      throw InvalidArgument("physical parameters must be finite");
    }
    if (drive_omega1 < Scalar(0)) {
      throw InvalidArgument("drive amplitude omega1 must be nonnegative");
    }
  }

  Scalar omega_i_;
  Scalar omega_j_;
  Scalar coupling_j_;
  Scalar drive_omega_;
  Scalar drive_omega1_;
};

template <typename Scalar>
struct TransitionFrequencies {
  Scalar plus;   // spin j up
  Scalar minus;  // spin j down
};

/// Berry phases of spin i for both states of spin j, and the gate phases
/// they produce.
template <typename Scalar>
struct BerryPhaseResult {
  Scalar cos_theta_plus;
  Scalar cos_theta_minus;
  Scalar gamma_plus;
  Scalar gamma_minus;
  Scalar shift;  // gamma_plus + gamma_minus
  Scalar phi_1;
  Scalar phi_2;
};

/// diag(e^{i phi1}, e^{i phi2}, e^{i phi2}, e^{i phi1}) in the basis
/// |00>, |01>, |10>, |11>.
template <typename Scalar>
class DiagonalTwoQubitGate {
 public:
  using Complex = std::complex<Scalar>;
  using Diagonal = Eigen::Matrix<Complex, 4, 1>;

  static DiagonalTwoQubitGate from_phases(Scalar phi_1, Scalar phi_2) {
    if (!std::isfinite(phi_1) || !std::isfinite(phi_2)) {
      throw InvalidArgument("gate phases must be finite");
    }
    const Complex same = std::polar(Scalar(1), phi_1);
    const Complex differ = std::polar(Scalar(1), phi_2);
    return DiagonalTwoQubitGate(same, differ);
  }

  static DiagonalTwoQubitGate identity() { return from_phases(Scalar(0), Scalar(0)); }

  /// Factor applied when the two qubits carry equal bits.
  Complex agree() const { return phases_(0); }
  /// Factor applied when the bits differ.
  Complex disagree() const { return phases_(1); }

  /// Entry for local basis index 2*b_control + b_target.
  Complex entry(int local_index) const { return phases_(local_index); }
  const Diagonal& phases() const { return phases_; }

  Eigen::Matrix<Complex, 4, 4> matrix() const { return phases_.asDiagonal(); }

 private:
  DiagonalTwoQubitGate(Complex agree, Complex disagree) {
    phases_ << agree, disagree, disagree, agree;
  }

  Diagonal phases_;
};

/// Diagonal of the system Hamiltonian in the basis up-up, up-down, down-up,
/// down-down.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 1> hamiltonian_diagonal(const PhysicalParams<Scalar>& params) {
  const Scalar wi = params.omega_i();
  const Scalar wj = params.omega_j();
  const Scalar pj = std::numbers::pi_v<Scalar> * params.coupling_j();
  Eigen::Matrix<Scalar, 4, 1> energies;
  energies << wi + wj + pj, wi - wj - pj, -wi + wj - pj, -wi - wj + pj;
  return energies / Scalar(2);
}

template <typename Scalar>
TransitionFrequencies<Scalar> transition_frequencies(const PhysicalParams<Scalar>& params) {
  const Scalar pj = std::numbers::pi_v<Scalar> * params.coupling_j();
  return {params.omega_i() + pj, params.omega_i() - pj};
}

namespace detail {

template <typename Scalar>
Scalar cos_theta(Scalar detuning, Scalar omega1, const char* branch) {
  if (detuning == Scalar(0) && omega1 == Scalar(0)) {
    throw DegenerateDrive(std::string("resonant drive with zero amplitude on the ") + branch +
                          " branch");
  }
  return detuning / std::hypot(detuning, omega1);
}

}  // namespace detail

/// Berry phases for one adiabatic loop of the drive field.
///
/// Throws DegenerateDrive when omega_{+/-} == omega and omega1 == 0.
template <typename Scalar>
BerryPhaseResult<Scalar> berry_phases(const PhysicalParams<Scalar>& params) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const auto freq = transition_frequencies(params);
  const Scalar w = params.drive_omega();
  const Scalar w1 = params.drive_omega1();

  BerryPhaseResult<Scalar> r;
  r.cos_theta_plus = detail::cos_theta(freq.plus - w, w1, "plus");
  r.cos_theta_minus = detail::cos_theta(freq.minus - w, w1, "minus");
  r.gamma_plus = -pi * (Scalar(1) - r.cos_theta_plus);
  r.gamma_minus = pi * (Scalar(1) - r.cos_theta_minus);
  r.shift = pi * (r.cos_theta_plus - r.cos_theta_minus);
  r.phi_1 = Scalar(2) * r.shift;
  r.phi_2 = -r.phi_1;
  return r;
}

template <typename Scalar>
DiagonalTwoQubitGate<Scalar> cphase_gate(const BerryPhaseResult<Scalar>& phases) {
  return DiagonalTwoQubitGate<Scalar>::from_phases(phases.phi_1, phases.phi_2);
}

using PhysicalParamsd = PhysicalParams<double>;
using BerryPhaseResultd = BerryPhaseResult<double>;
using DiagonalTwoQubitGated = DiagonalTwoQubitGate<double>;

}  // namespace holotoric
