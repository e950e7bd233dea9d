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
 * The perfect 5-qubit code: one logical qubit in five physical qubits,
 * correcting every single-qubit Pauli error.
 *
 * Stabilizer generators (character i acts on qubit i):
 *   g0 = XZZXI, g1 = IXZZX, g2 = XIXZZ, g3 = ZXIXZ.
 * |0_L> is the normalized projection of |00000> onto the +1 eigenspace of all
 * four generators, |1_L> the projection of |11111>.
 *
 * Syndrome bit g is 1 when the error anticommutes with generator g; syndrome
 * zero means no error. The syndrome-reading unitary maps E_i|b_L> to the basis
 * state with qubit 0 = b and qubits 1..4 = syndrome(E_i).
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qubitkit/random.hpp"
#include "qubitkit/statevec.hpp"

namespace qubitkit::qecc5 {

inline constexpr std::size_t kCodeQubits = 5;
inline constexpr std::size_t kNumErrors = 16;

struct LogicalQubit {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
};

enum class PauliKind : std::uint8_t { I, X, Z, Y };

/// One of the 16 correctable errors. Enumeration order: I, X0..X4, Z0..Z4, Y0..Y4.
struct PauliError {
  PauliKind kind = PauliKind::I;
  std::size_t qubit = 0;

  static PauliError from_index(std::size_t index);
  std::size_t index() const noexcept;
  /// "I", "X2", "Z0", "Y4", ...
  std::string name() const;
  static PauliError parse(const std::string& name);

  friend bool operator==(const PauliError&, const PauliError&) = default;
};

/// All 16 errors in enumeration order.
std::array<PauliError, kNumErrors> all_errors();

/// 4-bit syndrome; bit g belongs to generator g.
struct Syndrome {
  std::uint8_t value = 0;
  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

/// Syndrome assigned to each error, indexed by PauliError::index().
Syndrome syndrome_of(const PauliError& e);
/// Inverse table lookup.
PauliError error_for(Syndrome s);

struct NoiseModel {
  double p = 0.0;
  /// Conditional probabilities of X, Z, Y given that a qubit is hit.
  std::array<double, 3> kind_weights{1.0 / 3, 1.0 / 3, 1.0 / 3};

  void validate() const;
};

/// The logical codewords |0_L>, |1_L>.
const StateVector& logical_zero();
const StateVector& logical_one();

/// Stabilizer expectation values <g_0..g_3> of a 5-qubit state.
std::array<double, 4> stabilizer_expectations(const StateVector& state);

StateVector encode(const LogicalQubit& q);

/// Single Pauli on the indicated qubit (identity for kind I).
void apply_error(StateVector& state, const PauliError& e);

struct SyndromeMeasurement {
  Syndrome syndrome;
  /// Post-measurement state, still in the syndrome-reading frame.
  StateVector collapsed;
};

/// Applies the syndrome-reading unitary and measures qubits 1..4.
SyndromeMeasurement syndrome_extract(const StateVector& state, Rng& rng);

/// Undoes the syndrome-reading unitary and the error indicated by `syndrome`.
StateVector recover(const StateVector& collapsed, Syndrome syndrome);

/// (alpha, beta) up to global phase, alpha real and non-negative when nonzero.
/// Rejects states whose weight outside the code space exceeds 1e-6.
LogicalQubit decode(const StateVector& codeword);

/// 1 - |<0_L|s>|^2 - |<1_L|s>|^2.
double code_space_defect(const StateVector& state);

/// Independently hits each qubit with probability p; returns the Paulis
/// applied (empty when nothing happened).
std::vector<PauliError> apply_noise(StateVector& state, const NoiseModel& model, Rng& rng);

/// Haar-random logical qubit.
LogicalQubit random_logical(Rng& rng);

/// |<a|b>|^2 for logical qubits.
double logical_fidelity(const LogicalQubit& a, const LogicalQubit& b);

struct RateEstimate {
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate = 0.0;
  double standard_error = 0.0;
};

/// Monte-Carlo logical error rate of encode -> noise -> syndrome -> recover ->
/// decode. Trial t draws from derive_stream(seed, t).
RateEstimate logical_error_rate(const NoiseModel& model, std::uint64_t trials, std::uint64_t seed);

}  // namespace qubitkit::qecc5
