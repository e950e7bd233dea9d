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

#include "qubitkit/qft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qubitkit {

Circuit qft_circuit(std::size_t width, QftDirection direction) {
  if (width == 0) throw std::invalid_argument("QFT width must be at least 1");
  Circuit c(width);
  for (std::size_t t = width; t-- > 0;) {
    c.add(HadamardGate{t});
    for (std::size_t ctrl = t; ctrl-- > 0;) {
      c.add(ControlledPhaseGate{ctrl, t, std::numbers::pi / double(std::uint64_t{1} << (t - ctrl))});
    }
  }
  for (std::size_t i = 0; i < width / 2; ++i) {
    const std::size_t j = width - 1 - i;
    c.add(CnotGate{i, j});
    c.add(CnotGate{j, i});
    c.add(CnotGate{i, j});
  }
  return direction == QftDirection::Forward ? c : c.inverse();
}

Circuit qft_circuit(const QftSpec& spec, std::size_t num_qubits) {
  if (spec.span.width == 0) throw std::invalid_argument("QFT width must be at least 1");
  if (spec.span.first + spec.span.width > num_qubits) {
    throw std::out_of_range("QFT span [" + std::to_string(spec.span.first) + ", " +
                            std::to_string(spec.span.first + spec.span.width) +
                            ") exceeds a " + std::to_string(num_qubits) + "-qubit register");
  }
  const Circuit local = qft_circuit(spec.span.width, spec.direction);
  Circuit placed(num_qubits);
  for (const GateOp& g : local.gates()) placed.add(shifted(g, spec.span.first));
  return placed;
}

void apply_qft(StateVector& state, const QftSpec& spec) {
  apply_circuit(state, qft_circuit(spec, state.num_qubits()));
}

std::vector<Complex> dft_reference(std::span<const Complex> amplitudes, QftDirection direction) {
  const std::size_t n = amplitudes.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument("DFT length " + std::to_string(n) + " is not a power of two");
  }
  const double sign = direction == QftDirection::Forward ? 1.0 : -1.0;
  const double scale = 1.0 / std::sqrt(double(n));
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // reduce jk mod n before scaling to keep the angle small and exact
      const std::size_t jk = (j * k) & (n - 1);
      s += amplitudes[j] * std::polar(1.0, sign * 2.0 * std::numbers::pi * double(jk) / double(n));
    }
    out[k] = s * scale;
  }
  return out;
}

}  // namespace qubitkit
