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
 * Universal gate set, circuits, and reversible function evaluation.
 *
 * Gates are immutable values. Applying a gate mutates the register in place;
 * every kernel is a unitary so the norm is preserved without renormalizing.
 */
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qubitkit/statevec.hpp"

namespace qubitkit {

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Complex, 4>;

struct NotGate {
  std::size_t target;
};

struct CnotGate {
  std::size_t control;
  std::size_t target;
};

/// Toffoli: target ^= (c1 AND c2).
struct CcnotGate {
  std::size_t control1;
  std::size_t control2;
  std::size_t target;
};

struct HadamardGate {
  std::size_t target;
};

/// Multiplies |11> on (control, target) by e^{i angle}.
struct ControlledPhaseGate {
  std::size_t control;
  std::size_t target;
  double angle;
};

/// Arbitrary single-qubit unitary. Unitarity is checked on construction
/// (||U^dagger U - I||_max < 1e-12), never again at application time.
class U2Gate {
 public:
  U2Gate(std::size_t target, const Matrix2& matrix);

  std::size_t target() const noexcept { return target_; }
  const Matrix2& matrix() const noexcept { return matrix_; }

  static U2Gate pauli_x(std::size_t target);
  static U2Gate pauli_y(std::size_t target);
  static U2Gate pauli_z(std::size_t target);

 private:
  std::size_t target_;
  Matrix2 matrix_;
};

using GateOp =
    std::variant<NotGate, CnotGate, CcnotGate, U2Gate, ControlledPhaseGate, HadamardGate>;

/// Qubits the gate touches, controls first and target last.
std::vector<std::size_t> gate_qubits(const GateOp& gate);

/// Inverse gate (NOT, CNOT, CCNOT, H are involutions).
GateOp inverse(const GateOp& gate);

/// Same gate with every qubit index shifted by `offset`.
GateOp shifted(const GateOp& gate, std::size_t offset);

void apply_gate(StateVector& state, const GateOp& gate);

/// Ordered gate list over a declared number of qubits.
class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits);

  /// Appends `gate`; rejects out-of-range or colliding indices.
  Circuit& add(GateOp gate);
  Circuit& append(const Circuit& other);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::span<const GateOp> gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Reversed gate order with each gate inverted.
  Circuit inverse() const;

 private:
  std::size_t num_qubits_;
  std::vector<GateOp> gates_;
};

void apply_circuit(StateVector& state, const Circuit& circuit);

/// Contiguous run of qubits [first, first + width).
struct QubitSpan {
  std::size_t first = 0;
  std::size_t width = 0;

  std::uint64_t extract(std::uint64_t n) const noexcept {
    return (n >> first) & ((std::uint64_t{1} << width) - 1);
  }
  std::uint64_t deposit(std::uint64_t value) const noexcept { return value << first; }
  std::uint64_t mask() const noexcept { return ((std::uint64_t{1} << width) - 1) << first; }
};

/// Classical bijection used as a quantum oracle. Either an explicit
/// permutation table on [0, 2^d) or modular exponentiation x -> a^x mod N.
class ReversibleFunction {
 public:
  /// Throws unless `table` is a permutation of [0, table.size()) with a
  /// power-of-two size.
  static ReversibleFunction from_table(std::vector<std::uint64_t> table);

  /// x -> a^x mod N over a `domain_qubits` wide input; requires gcd(a, N) = 1.
  static ReversibleFunction modexp(std::uint64_t a, std::uint64_t modulus,
                                   std::size_t domain_qubits);

  std::size_t domain_qubits() const noexcept { return domain_qubits_; }

  /// Smallest register width that holds every output value.
  std::size_t output_qubits() const noexcept;

  std::uint64_t operator()(std::uint64_t x) const;

  bool is_modexp() const noexcept { return !table_.has_value(); }

 private:
  ReversibleFunction() = default;

  std::size_t domain_qubits_ = 0;
  std::optional<std::vector<std::uint64_t>> table_;
  std::uint64_t base_ = 0;
  std::uint64_t modulus_ = 0;
};

/// |x, y> -> |x, y XOR f(x)> with x read from `input` and y from `output`.
void apply_function_xor(StateVector& state, const ReversibleFunction& f, QubitSpan input,
                        QubitSpan output);

/// Register layout for compute-copy-uncompute. The function value f_with_garbage(x)
/// is split as work = low `work.width` bits, garbage = the bits above.
struct AncillaLayout {
  QubitSpan x;
  QubitSpan work;
  QubitSpan garbage;
  QubitSpan save;
};

/// |x,0,0,0> -> |x,f,g,0> -> |x,f,g,f> -> |x,0,0,f>. The copy is a CNOT
/// ladder from work into save; the uncompute is the exact inverse of the
/// compute step.
void compute_copy_uncompute(StateVector& state, const ReversibleFunction& f_with_garbage,
                            const AncillaLayout& layout);

/// The CNOT ladder copying `from` into `to` bitwise.
Circuit copy_circuit(std::size_t num_qubits, QubitSpan from, QubitSpan to);

/// Text form: one gate per line (`NOT q`, `CNOT c t`, `CCNOT c1 c2 t`, `H q`,
/// `CPHASE c t angle`, `U2 q re00 im00 re01 im01 re10 im10 re11 im11`), `#`
/// starts a comment line.
Circuit parse_circuit(std::istream& in, std::size_t num_qubits);
void write_circuit(std::ostream& out, const Circuit& circuit);

}  // namespace qubitkit
