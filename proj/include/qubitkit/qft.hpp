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
 * Quantum Fourier transform as a gate circuit, plus an O(n^2) reference DFT.
 *
 * Forward convention: F_jk = exp(+2 pi i jk / 2^m) / sqrt(2^m).
 */
#pragma once

#include <span>
#include <vector>

#include "qubitkit/gates.hpp"

namespace qubitkit {

enum class QftDirection { Forward, Inverse };

struct QftSpec {
  QubitSpan span;
  QftDirection direction = QftDirection::Forward;
};

/// Hadamards and controlled phases pi/2^k on qubits [0, width), followed by
/// the bit-order reversal as 3-CNOT swaps. The inverse direction is the
/// adjoint circuit.
Circuit qft_circuit(std::size_t width, QftDirection direction = QftDirection::Forward);

/// Same circuit placed on `spec.span` of a `num_qubits` register.
Circuit qft_circuit(const QftSpec& spec, std::size_t num_qubits);

/// Transforms the amplitudes along the span, independently for every setting
/// of the remaining qubits.
void apply_qft(StateVector& state, const QftSpec& spec);

/// Direct unitary DFT by summation. Length must be a power of two.
std::vector<Complex> dft_reference(std::span<const Complex> amplitudes,
                                   QftDirection direction = QftDirection::Forward);

}  // namespace qubitkit
