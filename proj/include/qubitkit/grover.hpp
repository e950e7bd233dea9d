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

#pragma once

#include <cstdint>
#include <optional>

#include "qubitkit/random.hpp"
#include "qubitkit/statevec.hpp"

namespace qubitkit::grover {

/// Black box marking exactly one of 2^n inputs. Every use, classical or as a
/// phase flip on a register, counts as one query.
class SearchOracle {
 public:
  SearchOracle(std::size_t num_qubits, std::uint64_t marked);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::uint64_t queries() const noexcept { return queries_; }

  /// Classical query: 1 for the marked input, 0 otherwise.
  bool query(std::uint64_t x);

  /// Negates the amplitude of the marked basis state.
  void phase_flip(StateVector& state);

 private:
  std::size_t num_qubits_;
  std::uint64_t marked_;
  std::uint64_t queries_ = 0;
};

/// Oracle phase flip (one query).
void oracle_phase_flip(StateVector& state, SearchOracle& oracle);

/// Reflection about the uniform superposition: c <- 2 mean(c) - c.
void diffusion(StateVector& state);

/// floor(pi/4 sqrt(2^n)).
std::uint64_t optimal_iterations(std::size_t num_qubits);

/// sin^2((2k+1) asin(2^{-n/2})).
double success_probability(std::size_t num_qubits, std::uint64_t iterations);

struct SearchResult {
  std::uint64_t found = 0;
  std::uint64_t iterations = 0;
  double success_prob_analytic = 0.0;
};

/// Runs `iterations` (default optimal) rounds of oracle + diffusion from the
/// uniform state and measures. Issues exactly `iterations` oracle queries.
SearchResult grover_search(SearchOracle& oracle, Rng& rng,
                           std::optional<std::uint64_t> iterations = std::nullopt);

}  // namespace qubitkit::grover
