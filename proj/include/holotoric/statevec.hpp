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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "holotoric/bits.hpp"
#include "holotoric/errors.hpp"
#include "holotoric/spin_model.hpp"

namespace holotoric {

inline constexpr int kMaxStateQubits = 24;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kPhaseClassTolerance = 1e-9;

/// The two qubit slots (1-based) a two-qubit gate acts on.
class GatePlacement {
 public:
  GatePlacement(int control, int target) : control_(control), target_(target) {
    if (control < 1 || target < 1) throw InvalidArgument("qubit indices are 1-based");
    if (control == target) throw InvalidArgument("control and target must differ");
  }

  int control() const { return control_; }
  int target() const { return target_; }

  /// Throws unless both slots exist in an n-qubit register.
  void check_fits(int n) const {
    if (control_ > n || target_ > n) {
      throw InvalidArgument("placement (" + std::to_string(control_) + "," +
                            std::to_string(target_) + ") out of range for " +
                            std::to_string(n) + " qubits");
    }
  }

  GatePlacement swapped() const { return {target_, control_}; }

  friend bool operator==(const GatePlacement&, const GatePlacement&) = default;

 private:
  int control_;
  int target_;
};

/// Every ordered placement of a two-qubit gate in an n-qubit register.
inline std::vector<GatePlacement> all_placements(int n) {
  std::vector<GatePlacement> out;
  for (int c = 1; c <= n; ++c)
    for (int t = 1; t <= n; ++t)
      if (c != t) out.emplace_back(c, t);
  return out;
}

/// Dense normalized n-qubit pure state.
template <typename Scalar>
class StateVector {
 public:
  using Complex = std::complex<Scalar>;
  using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  StateVector(int n_qubits, Amplitudes amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
      throw InvalidArgument("qubit count must be in 1.." + std::to_string(kMaxStateQubits));
    }
    if (amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
      throw InvalidArgument("amplitude count must be 2^n");
    }
    if (!amplitudes_.allFinite()) throw InvalidArgument("amplitudes must be finite");
    const Scalar norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - Scalar(1)) > Scalar(kNormTolerance)) {
      throw InvalidArgument("state is not normalized");
    }
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  Complex operator[](BasisIndex index) const {
    return amplitudes_(static_cast<Eigen::Index>(index));
  }

 private:
  int n_qubits_;
  Amplitudes amplitudes_;
};

/// H^{(x)n}|0...0>: every amplitude equals 2^{-n/2}.
template <typename Scalar>
StateVector<Scalar> uniform_superposition(int n) {
  if (n < 1 || n > kMaxStateQubits) {
    throw InvalidArgument("qubit count must be in 1.." + std::to_string(kMaxStateQubits));
  }
  using Complex = std::complex<Scalar>;
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Scalar a = Scalar(1) / std::sqrt(static_cast<Scalar>(dim));
  return StateVector<Scalar>(n, StateVector<Scalar>::Amplitudes::Constant(dim, Complex(a, 0)));
}

/// Applies the diagonal gate on (control, target). Basis state x picks up
/// gate.entry(2*x_control + x_target); for the symmetric (a,b,b,a) gate that
/// is e^{i phi1} when the two bits agree and e^{i phi2} otherwise.
template <typename Scalar>
StateVector<Scalar> apply_cphase(const StateVector<Scalar>& state,
                                 const DiagonalTwoQubitGate<Scalar>& gate,
                                 const GatePlacement& placement) {
  const int n = state.n_qubits();
  placement.check_fits(n);
  const int c_shift = n - placement.control();
  const int t_shift = n - placement.target();
  typename StateVector<Scalar>::Amplitudes out = state.amplitudes();
  for (Eigen::Index x = 0; x < out.size(); ++x) {
    const auto ux = static_cast<BasisIndex>(x);
    const int local = static_cast<int>(((ux >> c_shift) & 1U) << 1 | ((ux >> t_shift) & 1U));
    out(x) *= gate.entry(local);
  }
  return StateVector<Scalar>(n, std::move(out));
}

/// 2|a00 a11 - a01 a10| for a two-qubit pure state.
template <typename Scalar>
Scalar concurrence(const StateVector<Scalar>& state) {
  if (state.n_qubits() != 2) throw InvalidArgument("concurrence needs exactly two qubits");
  const auto& a = state.amplitudes();
  return Scalar(2) * std::abs(a(0) * a(3) - a(1) * a(2));
}

/// Groups basis indices whose amplitudes agree within `tolerance` (complex
/// distance to the first member of the class). Indices with |amplitude| <=
/// tolerance are left out. Classes come out ordered by their smallest index,
/// members ascending.
template <typename Scalar>
std::vector<std::vector<BasisIndex>> extract_phase_classes(const StateVector<Scalar>& state,
                                                           Scalar tolerance) {
  if (!(tolerance > Scalar(0))) throw InvalidArgument("tolerance must be positive");
  std::vector<std::vector<BasisIndex>> classes;
  std::vector<std::complex<Scalar>> representatives;
  const auto& a = state.amplitudes();
  for (Eigen::Index x = 0; x < a.size(); ++x) {
    if (std::abs(a(x)) <= tolerance) continue;
    std::size_t k = 0;
    while (k < representatives.size() && std::abs(a(x) - representatives[k]) > tolerance) ++k;
    if (k == representatives.size()) {
      representatives.push_back(a(x));
      classes.emplace_back();
    }
    classes[k].push_back(static_cast<BasisIndex>(x));
  }
  return classes;
}

using StateVectord = StateVector<double>;

}  // namespace holotoric
