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

#include "qubitkit/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qubitkit {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

constexpr std::uint64_t bit(std::size_t q) { return std::uint64_t{1} << q; }

// Spreads the bits of k around zeros at the (ascending) positions in `holes`.
inline std::uint64_t insert_zeros(std::uint64_t k, const std::size_t* holes, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t q = holes[i];
    const std::uint64_t low = k & (bit(q) - 1);
    k = ((k >> q) << (q + 1)) | low;
  }
  return k;
}

void check_indices(std::span<const std::size_t> qubits, std::size_t num_qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= num_qubits) {
      throw std::out_of_range("gate qubit " + std::to_string(qubits[i]) + " outside a " +
                              std::to_string(num_qubits) + "-qubit register");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("gate uses qubit " + std::to_string(qubits[i]) + " twice");
      }
    }
  }
}

enum class Kernel { Swap, Phase, Dense };

// Plain complex product; std::complex operator* also handles inf/nan cases
// through a library call, which dominates the inner loops below.
inline Complex mul(const Complex& a, const Complex& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

// Applies a 2x2 block on `target` to every amplitude pair whose control bits
// are all set.
void controlled_kernel(StateVector& state, std::span<const std::size_t> controls,
                       std::size_t target, Kernel kind, const Matrix2& m) {
  std::array<std::size_t, 3> holes{};
  std::size_t count = 0;
  std::uint64_t control_mask = 0;
  for (std::size_t c : controls) {
    holes[count++] = c;
    control_mask |= bit(c);
  }
  holes[count++] = target;
  std::sort(holes.begin(), holes.begin() + count);

  Complex* amps = state.mutable_amplitudes().data();
  const std::uint64_t pairs = state.size() >> count;
  const std::uint64_t tbit = bit(target);

  switch (kind) {
    case Kernel::Swap:
      for (std::uint64_t k = 0; k < pairs; ++k) {
        const std::uint64_t lo = insert_zeros(k, holes.data(), count) | control_mask;
        std::swap(amps[lo], amps[lo | tbit]);
      }
      break;
    case Kernel::Phase: {
      const Complex phase = m[3];
      for (std::uint64_t k = 0; k < pairs; ++k) {
        const std::uint64_t lo = insert_zeros(k, holes.data(), count) | control_mask;
        amps[lo | tbit] = mul(amps[lo | tbit], phase);
      }
      break;
    }
    case Kernel::Dense:
      for (std::uint64_t k = 0; k < pairs; ++k) {
        const std::uint64_t lo = insert_zeros(k, holes.data(), count) | control_mask;
        const std::uint64_t hi = lo | tbit;
        const Complex a = amps[lo];
        const Complex b = amps[hi];
        amps[lo] = mul(m[0], a) + mul(m[1], b);
        amps[hi] = mul(m[2], a) + mul(m[3], b);
      }
      break;
  }
}

void check_same_register(const StateVector& state, std::size_t num_qubits, const char* what) {
  if (state.num_qubits() != num_qubits) {
    throw std::invalid_argument(std::string(what) + " declared for " + std::to_string(num_qubits) +
                                " qubits applied to a " + std::to_string(state.num_qubits()) +
                                "-qubit register");
  }
}

void check_span(QubitSpan s, std::size_t num_qubits, const char* name) {
  if (s.first + s.width > num_qubits) {
    throw std::out_of_range(std::string(name) + " register [" + std::to_string(s.first) + ", " +
                            std::to_string(s.first + s.width) + ") exceeds " +
                            std::to_string(num_qubits) + " qubits");
  }
}

bool overlaps(QubitSpan a, QubitSpan b) { return (a.mask() & b.mask()) != 0; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

// Permutes amplitudes by an involutive basis map n -> target(n).
template <class Map>
void permute_involution(StateVector& state, Map target) {
  auto amps = state.mutable_amplitudes();
  for (std::uint64_t n = 0; n < amps.size(); ++n) {
    const std::uint64_t m = target(n);
    if (m > n) std::swap(amps[n], amps[m]);
  }
}

}  // namespace

// --- U2Gate ----------------------------------------------------------------

U2Gate::U2Gate(std::size_t target, const Matrix2& matrix) : target_(target), matrix_(matrix) {
  // (U^dagger U)_{ij} = sum_k conj(U_ki) U_kj
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex s = std::conj(matrix[i]) * matrix[j] + std::conj(matrix[2 + i]) * matrix[2 + j];
      if (i == j) s -= 1.0;
      worst = std::max({worst, std::abs(s.real()), std::abs(s.imag())});
    }
  }
  if (!(worst < 1e-12)) {
    throw std::invalid_argument("U2 matrix is not unitary (max deviation " +
                                std::to_string(worst) + ")");
  }
}

U2Gate U2Gate::pauli_x(std::size_t target) { return U2Gate(target, {0.0, 1.0, 1.0, 0.0}); }

U2Gate U2Gate::pauli_y(std::size_t target) {
  return U2Gate(target, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
}

U2Gate U2Gate::pauli_z(std::size_t target) { return U2Gate(target, {1.0, 0.0, 0.0, -1.0}); }

// --- GateOp helpers ---------------------------------------------------------

std::vector<std::size_t> gate_qubits(const GateOp& gate) {
  return std::visit(
      Overloaded{
          [](const NotGate& g) { return std::vector<std::size_t>{g.target}; },
          [](const CnotGate& g) { return std::vector<std::size_t>{g.control, g.target}; },
          [](const CcnotGate& g) {
            return std::vector<std::size_t>{g.control1, g.control2, g.target};
          },
          [](const U2Gate& g) { return std::vector<std::size_t>{g.target()}; },
          [](const ControlledPhaseGate& g) {
            return std::vector<std::size_t>{g.control, g.target};
          },
          [](const HadamardGate& g) { return std::vector<std::size_t>{g.target}; },
      },
      gate);
}

GateOp inverse(const GateOp& gate) {
  return std::visit(
      Overloaded{
          [](const U2Gate& g) -> GateOp {
            const Matrix2& m = g.matrix();
            return U2Gate(g.target(),
                          {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])});
          },
          [](const ControlledPhaseGate& g) -> GateOp {
            return ControlledPhaseGate{g.control, g.target, -g.angle};
          },
          [](const auto& g) -> GateOp { return g; },
      },
      gate);
}

GateOp shifted(const GateOp& gate, std::size_t offset) {
  return std::visit(
      Overloaded{
          [=](const NotGate& g) -> GateOp { return NotGate{g.target + offset}; },
          [=](const CnotGate& g) -> GateOp {
            return CnotGate{g.control + offset, g.target + offset};
          },
          [=](const CcnotGate& g) -> GateOp {
            return CcnotGate{g.control1 + offset, g.control2 + offset, g.target + offset};
          },
          [=](const U2Gate& g) -> GateOp { return U2Gate(g.target() + offset, g.matrix()); },
          [=](const ControlledPhaseGate& g) -> GateOp {
            return ControlledPhaseGate{g.control + offset, g.target + offset, g.angle};
          },
          [=](const HadamardGate& g) -> GateOp { return HadamardGate{g.target + offset}; },
      },
      gate);
}

void apply_gate(StateVector& state, const GateOp& gate) {
  const std::vector<std::size_t> qubits = gate_qubits(gate);
  check_indices(qubits, state.num_qubits());
  const std::span<const std::size_t> controls(qubits.data(), qubits.size() - 1);
  const std::size_t target = qubits.back();

  std::visit(Overloaded{
                 [&](const NotGate&) { controlled_kernel(state, {}, target, Kernel::Swap, {}); },
                 [&](const CnotGate&) {
                   controlled_kernel(state, controls, target, Kernel::Swap, {});
                 },
                 [&](const CcnotGate&) {
                   controlled_kernel(state, controls, target, Kernel::Swap, {});
                 },
                 [&](const U2Gate& g) {
                   controlled_kernel(state, {}, target, Kernel::Dense, g.matrix());
                 },
                 [&](const ControlledPhaseGate& g) {
                   const Matrix2 m{1.0, 0.0, 0.0, std::polar(1.0, g.angle)};
                   controlled_kernel(state, controls, target, Kernel::Phase, m);
                 },
                 [&](const HadamardGate&) {
                   const double h = 1.0 / std::sqrt(2.0);
                   controlled_kernel(state, {}, target, Kernel::Dense, {h, h, h, -h});
                 },
             },
             gate);
}

// --- Circuit ----------------------------------------------------------------

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit& Circuit::add(GateOp gate) {
  check_indices(gate_qubits(gate), num_qubits_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_) {
    throw std::invalid_argument("appended circuit is wider than the target circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(num_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(qubitkit::inverse(*it));
  }
  return out;
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  check_same_register(state, circuit.num_qubits(), "circuit");
  for (const GateOp& g : circuit.gates()) apply_gate(state, g);
}

// --- ReversibleFunction -----------------------------------------------------

ReversibleFunction ReversibleFunction::from_table(std::vector<std::uint64_t> table) {
  const std::size_t n = table.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw std::invalid_argument("permutation table size " + std::to_string(n) +
                                " is not a power of two");
  }
  std::vector<bool> hit(n, false);
  for (std::uint64_t v : table) {
    if (v >= n || hit[v]) {
      throw std::invalid_argument("table is not a permutation (value " + std::to_string(v) + ")");
    }
    hit[v] = true;
  }
  ReversibleFunction f;
  f.domain_qubits_ = static_cast<std::size_t>(std::countr_zero(n));
  f.table_ = std::move(table);
  return f;
}

ReversibleFunction ReversibleFunction::modexp(std::uint64_t a, std::uint64_t modulus,
                                              std::size_t domain_qubits) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (domain_qubits == 0 || domain_qubits > 62) {
    throw std::invalid_argument("modexp domain width out of range");
  }
  if (std::gcd(a, modulus) != 1) {
    throw std::invalid_argument("modexp base " + std::to_string(a) + " shares a factor with " +
                                std::to_string(modulus));
  }
  ReversibleFunction f;
  f.domain_qubits_ = domain_qubits;
  f.base_ = a;
  f.modulus_ = modulus;
  return f;
}

std::size_t ReversibleFunction::output_qubits() const noexcept {
  if (table_) return domain_qubits_;
  return static_cast<std::size_t>(std::bit_width(modulus_ - 1));
}

std::uint64_t ReversibleFunction::operator()(std::uint64_t x) const {
  if (table_) return (*table_)[x];
  return pow_mod(base_, x, modulus_);
}

void apply_function_xor(StateVector& state, const ReversibleFunction& f, QubitSpan input,
                        QubitSpan output) {
  check_span(input, state.num_qubits(), "input");
  check_span(output, state.num_qubits(), "output");
  if (overlaps(input, output)) throw std::invalid_argument("input and output registers overlap");
  if (input.width != f.domain_qubits()) {
    throw std::invalid_argument("input register width " + std::to_string(input.width) +
                                " does not match function domain of " +
                                std::to_string(f.domain_qubits()) + " qubits");
  }
  if (output.width < f.output_qubits()) {
    throw std::invalid_argument("output register of " + std::to_string(output.width) +
                                " qubits cannot hold values needing " +
                                std::to_string(f.output_qubits()));
  }
  // f(x) does not depend on the output bits, so the map is its own inverse.
  std::vector<std::uint64_t> values(std::uint64_t{1} << input.width);
  for (std::uint64_t x = 0; x < values.size(); ++x) values[x] = output.deposit(f(x));
  permute_involution(state, [&](std::uint64_t n) { return n ^ values[input.extract(n)]; });
}

Circuit copy_circuit(std::size_t num_qubits, QubitSpan from, QubitSpan to) {
  if (to.width < from.width) throw std::invalid_argument("copy destination too narrow");
  Circuit c(num_qubits);
  for (std::size_t i = 0; i < from.width; ++i) c.add(CnotGate{from.first + i, to.first + i});
  return c;
}

void compute_copy_uncompute(StateVector& state, const ReversibleFunction& f_with_garbage,
                            const AncillaLayout& layout) {
  const std::size_t l = state.num_qubits();
  check_span(layout.x, l, "x");
  check_span(layout.work, l, "work");
  check_span(layout.garbage, l, "garbage");
  check_span(layout.save, l, "save");
  const std::array<QubitSpan, 4> spans{layout.x, layout.work, layout.garbage, layout.save};
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (overlaps(spans[i], spans[j])) throw std::invalid_argument("ancilla layout overlaps");
    }
  }
  if (layout.x.width != f_with_garbage.domain_qubits()) {
    throw std::invalid_argument("x register width does not match the function domain");
  }
  if (layout.work.width + layout.garbage.width < f_with_garbage.output_qubits()) {
    throw std::invalid_argument("work and garbage registers cannot hold the function output");
  }
  if (layout.save.width < layout.work.width) {
    throw std::invalid_argument("save register narrower than the work register");
  }

  const std::uint64_t ancilla_mask = layout.work.mask() | layout.garbage.mask() | layout.save.mask();
  double dirty = 0.0;
  const auto amps = state.amplitudes();
  for (std::uint64_t n = 0; n < amps.size(); ++n) {
    if (n & ancilla_mask) dirty += std::norm(amps[n]);
  }
  if (dirty > 1e-9) {
    throw std::invalid_argument("ancilla registers are not all zero (weight " +
                                std::to_string(dirty) + ")");
  }

  const std::uint64_t work_mask = (std::uint64_t{1} << layout.work.width) - 1;
  std::vector<std::uint64_t> flips(std::uint64_t{1} << layout.x.width);
  for (std::uint64_t x = 0; x < flips.size(); ++x) {
    const std::uint64_t v = f_with_garbage(x);
    flips[x] = layout.work.deposit(v & work_mask) | layout.garbage.deposit(v >> layout.work.width);
  }
  const auto compute = [&](StateVector& s) {
    permute_involution(s, [&](std::uint64_t n) { return n ^ flips[layout.x.extract(n)]; });
  };

  compute(state);
  apply_circuit(state, copy_circuit(l, layout.work, layout.save));
  compute(state);  // XOR-compute is self-inverse
}

}  // namespace qubitkit
