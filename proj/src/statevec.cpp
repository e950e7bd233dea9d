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

#include "qubitkit/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qubitkit {
namespace {

void check_qubit_count(std::size_t num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("register needs at least one qubit");
  if (num_qubits > kMaxQubits) {
    throw std::length_error("register of " + std::to_string(num_qubits) +
                            " qubits exceeds the simulator capacity of " +
                            std::to_string(kMaxQubits));
  }
}

void check_measurable(const StateVector& state) {
  const double norm = state.norm_squared();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw std::domain_error("cannot measure a state with squared norm " + std::to_string(norm));
  }
}

void check_qubit_set(const StateVector& state, std::span<const std::size_t> qubits) {
  if (qubits.empty()) throw std::invalid_argument("measured qubit set is empty");
  std::uint64_t seen = 0;
  for (std::size_t q : qubits) {
    if (q >= state.num_qubits()) {
      throw std::out_of_range("qubit " + std::to_string(q) + " outside a " +
                              std::to_string(state.num_qubits()) + "-qubit register");
    }
    if (seen & (std::uint64_t{1} << q)) {
      throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
    }
    seen |= std::uint64_t{1} << q;
  }
}

std::uint64_t gather_bits(std::uint64_t n, std::span<const std::size_t> qubits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) v |= ((n >> qubits[i]) & 1U) << i;
  return v;
}

// Index of the first cumulative bin exceeding u, skipping impossible bins.
std::size_t sample_index(std::span<const double> probs, double u) {
  double total = 0.0;
  for (double p : probs) total += p;
  const double target = u * total;
  double acc = 0.0;
  std::size_t last_possible = probs.size();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < kImpossibleProbability) continue;
    last_possible = i;
    acc += probs[i];
    if (target < acc) return i;
  }
  return last_possible;  // rounding at the top end
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits);
  if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("expected " + std::to_string(std::size_t{1} << num_qubits) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  const double norm = norm_squared();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::domain_error("amplitudes are not normalized (squared norm " +
                            std::to_string(norm) + ")");
  }
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::uniform(std::size_t num_qubits) {
  check_qubit_count(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  return StateVector(num_qubits, std::vector<Complex>(dim, 1.0 / std::sqrt(double(dim))));
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("amplitude count " + std::to_string(dim) +
                                " is not a power of two");
  }
  double norm = 0.0;
  for (const Complex& c : amplitudes) norm += std::norm(c);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::domain_error("cannot normalize amplitudes with zero or non-finite norm");
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& c : amplitudes) c *= scale;
  std::size_t l = 0;
  while ((std::size_t{1} << l) < dim) ++l;
  return StateVector(l, std::move(amplitudes));
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const Complex& c : amplitudes_) s += std::norm(c);
  return s;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                 [](const Complex& c) { return std::norm(c); });
  return p;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner product of registers with " +
                                std::to_string(a.num_qubits()) + " and " +
                                std::to_string(b.num_qubits()) + " qubits");
  }
  Complex s = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::min(1.0, std::norm(inner_product(a, b)));
}

MeasurementOutcome measure_all(StateVector& state, Rng& rng) {
  check_measurable(state);
  const std::vector<double> probs = state.probabilities();
  const std::uint64_t n = sample_index(probs, uniform01(rng));

  auto amps = state.mutable_amplitudes();
  std::fill(amps.begin(), amps.end(), Complex{});
  amps[n] = 1.0;

  MeasurementOutcome out;
  out.basis_index = n;
  out.bits.resize(state.num_qubits());
  for (std::size_t q = 0; q < state.num_qubits(); ++q) out.bits[q] = (n >> q) & 1U;
  return out;
}

std::vector<double> marginal_probabilities(const StateVector& state,
                                           std::span<const std::size_t> qubits) {
  check_qubit_set(state, qubits);
  std::vector<double> marginal(std::size_t{1} << qubits.size(), 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t n = 0; n < amps.size(); ++n) {
    marginal[gather_bits(n, qubits)] += std::norm(amps[n]);
  }
  return marginal;
}

SubsetOutcome measure_subset(StateVector& state, std::span<const std::size_t> qubits, Rng& rng) {
  check_measurable(state);
  const std::vector<double> marginal = marginal_probabilities(state, qubits);
  const std::uint64_t value = sample_index(marginal, uniform01(rng));

  const double scale = 1.0 / std::sqrt(marginal[value]);
  auto amps = state.mutable_amplitudes();
  for (std::uint64_t n = 0; n < amps.size(); ++n) {
    if (gather_bits(n, qubits) == value) {
      amps[n] *= scale;
    } else {
      amps[n] = 0.0;
    }
  }

  SubsetOutcome out;
  out.value = value;
  out.bits.resize(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) out.bits[i] = (value >> i) & 1U;
  return out;
}

}  // namespace qubitkit
