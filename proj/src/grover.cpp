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

#include "qubitkit/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qubitkit::grover {

SearchOracle::SearchOracle(std::size_t num_qubits, std::uint64_t marked)
    : num_qubits_(num_qubits), marked_(marked) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("search register size out of range");
  }
  if (marked >= (std::uint64_t{1} << num_qubits)) {
    throw std::out_of_range("marked index " + std::to_string(marked) + " outside 2^" +
                            std::to_string(num_qubits));
  }
}

bool SearchOracle::query(std::uint64_t x) {
  ++queries_;
  return x == marked_;
}

void SearchOracle::phase_flip(StateVector& state) {
  if (state.num_qubits() != num_qubits_) {
    throw std::invalid_argument("oracle over " + std::to_string(num_qubits_) +
                                " qubits applied to a " + std::to_string(state.num_qubits()) +
                                "-qubit register");
  }
  ++queries_;
  state.mutable_amplitudes()[marked_] *= -1.0;
}

void oracle_phase_flip(StateVector& state, SearchOracle& oracle) { oracle.phase_flip(state); }

void diffusion(StateVector& state) {
  auto amps = state.mutable_amplitudes();
  Complex mean = 0.0;
  for (const Complex& c : amps) mean += c;
  mean /= double(amps.size());
  for (Complex& c : amps) c = 2.0 * mean - c;
}

std::uint64_t optimal_iterations(std::size_t num_qubits) {
  return static_cast<std::uint64_t>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, int(num_qubits)))));
}

double success_probability(std::size_t num_qubits, std::uint64_t iterations) {
  const double theta = std::asin(std::pow(2.0, -0.5 * double(num_qubits)));
  const double s = std::sin(double(2 * iterations + 1) * theta);
  return s * s;
}

SearchResult grover_search(SearchOracle& oracle, Rng& rng, std::optional<std::uint64_t> iterations) {
  if (oracle.num_qubits() < 2) throw std::invalid_argument("search needs at least 2 qubits");
  SearchResult result;
  result.iterations = iterations.value_or(optimal_iterations(oracle.num_qubits()));
  result.success_prob_analytic = success_probability(oracle.num_qubits(), result.iterations);

  StateVector state = StateVector::uniform(oracle.num_qubits());
  for (std::uint64_t k = 0; k < result.iterations; ++k) {
    oracle_phase_flip(state, oracle);
    diffusion(state);
  }
  result.found = measure_all(state, rng).basis_index;
  return result;
}

}  // namespace qubitkit::grover
