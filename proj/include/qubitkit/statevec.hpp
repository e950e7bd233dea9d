// Copyright 2026 The qubitkit Authors
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

/**
 * @file
 * Dense state-vector register: 2^l complex amplitudes, inner products and
 * projective measurement.
 *
 * Basis index n encodes the register in binary with qubit 0 as the least
 * significant bit. Every module in the library shares this convention.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qubitkit/random.hpp"

namespace qubitkit {

using Complex = std::complex<double>;

/// Largest register the simulator will allocate (2^30 amplitudes, 16 GiB).
inline constexpr std::size_t kMaxQubits = 30;

/// Allowed deviation of the squared norm from one after any public operation.
inline constexpr double kNormTolerance = 1e-9;

/// Branches below this probability are never selected by a measurement.
inline constexpr double kImpossibleProbability = 1e-300;

class StateVector {
 public:
  /// Takes ownership of `amplitudes`; the length must be 2^num_qubits and the
  /// squared norm must be within kNormTolerance of one.
  StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

  /// |n> on l qubits.
  static StateVector basis(std::size_t num_qubits, std::uint64_t index);

  /// Equal-amplitude superposition 1/sqrt(2^l) sum_n |n>.
  static StateVector uniform(std::size_t num_qubits);

  /// Scales arbitrary nonzero amplitudes to unit norm. The length fixes the
  /// qubit count and must be a power of two (at least 2).
  static StateVector normalized(std::vector<Complex> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

  /// Raw mutable access for gate kernels. Callers must leave the vector
  /// normalized.
  std::span<Complex> mutable_amplitudes() noexcept { return amplitudes_; }

  const Complex& operator[](std::uint64_t n) const { return amplitudes_[n]; }

  double norm_squared() const noexcept;

  /// Probability |c_n|^2 of every basis state.
  std::vector<double> probabilities() const;

 private:
  std::size_t num_qubits_;
  std::vector<Complex> amplitudes_;
};

struct MeasurementOutcome {
  std::uint64_t basis_index = 0;
  /// bits[q] is the value of qubit q.
  std::vector<std::uint8_t> bits;
};

/// Outcome of measuring a subset of qubits.
struct SubsetOutcome {
  /// bits[i] is the value observed on qubits[i] of the request.
  std::vector<std::uint8_t> bits;
  /// sum_i bits[i] << i.
  std::uint64_t value = 0;
};

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// <a|b>.
Complex inner_product(const StateVector& a, const StateVector& b);

/// Samples n with probability |c_n|^2 and collapses `state` to |n>.
MeasurementOutcome measure_all(StateVector& state, Rng& rng);

/// Samples the joint outcome of `qubits` from its marginal distribution and
/// collapses `state` onto the renormalized consistent projection.
SubsetOutcome measure_subset(StateVector& state, std::span<const std::size_t> qubits, Rng& rng);

/// Marginal distribution over the 2^k outcomes of `qubits`, indexed like
/// SubsetOutcome::value.
std::vector<double> marginal_probabilities(const StateVector& state,
                                           std::span<const std::size_t> qubits);

}  // namespace qubitkit
