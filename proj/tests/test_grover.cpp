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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qubitkit/grover.hpp"

using namespace qubitkit;
using namespace qubitkit::grover;

namespace {

// Oracle: the search stays in span{|w>, uniform over the rest}, so two real
// amplitudes evolve under the explicit reflections.
double recurrence_success(std::size_t n, std::uint64_t k) {
  const double size = std::ldexp(1.0, int(n));
  double a = 1.0 / std::sqrt(size);  // marked
  double b = a;                      // each unmarked
  for (std::uint64_t i = 0; i < k; ++i) {
    a = -a;
    const double mean = (a + (size - 1.0) * b) / size;
    a = 2.0 * mean - a;
    b = 2.0 * mean - b;
  }
  return a * a;
}

StateVector iterate(std::size_t n, std::uint64_t marked, std::uint64_t k) {
  SearchOracle oracle(n, marked);
  StateVector s = StateVector::uniform(n);
  for (std::uint64_t i = 0; i < k; ++i) {
    oracle_phase_flip(s, oracle);
    diffusion(s);
  }
  return s;
}

}  // namespace

TEST_CASE("optimal iteration counts") {
  CHECK(optimal_iterations(2) == 1);
  CHECK(optimal_iterations(3) == 2);
  CHECK(optimal_iterations(4) == 3);
  CHECK(optimal_iterations(6) == 6);
  CHECK(optimal_iterations(10) == 25);
  CHECK(optimal_iterations(20) == 804);
}

TEST_CASE("two qubits: one iteration finds the marked item with certainty") {
  CHECK(success_probability(2, 1) == doctest::Approx(1.0).epsilon(1e-15));
  for (std::uint64_t w = 0; w < 4; ++w) {
    const StateVector s = iterate(2, w, 1);
    CHECK(std::norm(s[w]) == doctest::Approx(1.0).epsilon(1e-14));
    Rng rng(w);
    SearchOracle oracle(2, w);
    for (int i = 0; i < 50; ++i) CHECK(grover_search(oracle, rng).found == w);
  }
}

TEST_CASE("diffusion matches the dense reflection 2|s><s| - I") {
  Rng rng(3);
  const std::size_t size = 16;
  std::vector<Complex> amps(size);
  for (Complex& c : amps) c = Complex(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
  StateVector s = StateVector::normalized(amps);
  std::vector<Complex> expected(size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double entry = 2.0 / double(size) - (i == j ? 1.0 : 0.0);
      expected[i] += entry * s[j];
    }
  }
  diffusion(s);
  for (std::size_t i = 0; i < size; ++i) CHECK(std::abs(s[i] - expected[i]) < 1e-14);
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
}

TEST_CASE("simulated, analytic and recurrence success probabilities agree") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const std::uint64_t w = (std::uint64_t{0x5a5} * 7 + n) % (std::uint64_t{1} << n);
    const std::uint64_t kopt = optimal_iterations(n);
    for (std::uint64_t k : {std::uint64_t{0}, std::uint64_t{1}, kopt / 2, kopt, kopt + 3}) {
      const StateVector s = iterate(n, w, k);
      const double sim = std::norm(s[w]);
      CHECK(std::abs(sim - success_probability(n, k)) <= 1e-10);
      CHECK(std::abs(sim - recurrence_success(n, k)) <= 1e-10);
      double max_imag = 0.0;
      for (const Complex& c : s.amplitudes()) max_imag = std::max(max_imag, std::abs(c.imag()));
      CHECK(max_imag <= 1e-12);
    }
    CHECK(success_probability(n, kopt) >= 1.0 - 1.0 / std::ldexp(1.0, int(n)) - 1e-12);
  }
}

TEST_CASE("all unmarked amplitudes stay equal") {
  const StateVector s = iterate(7, 100, 5);
  for (std::uint64_t x = 0; x < 128; ++x) {
    if (x != 100) CHECK(std::abs(s[x] - s[0]) < 1e-14);
  }
}

TEST_CASE("success probability does not depend on the marked location") {
  const std::size_t n = 8;
  const double reference = std::norm(iterate(n, 0, 12)[0]);
  for (std::uint64_t w : {1, 17, 128, 200, 255}) {
    CHECK(std::abs(std::norm(iterate(n, w, 12)[w]) - reference) <= 1e-12);
  }
}

TEST_CASE("query accounting") {
  Rng rng(7);
  for (std::size_t n : {2, 5, 9}) {
    SearchOracle oracle(n, 3);
    const auto res = grover_search(oracle, rng);
    CHECK(oracle.queries() == optimal_iterations(n));
    CHECK(res.iterations == optimal_iterations(n));
    oracle.query(res.found);
    CHECK(oracle.queries() == optimal_iterations(n) + 1);
  }
  SearchOracle oracle(4, 1);
  grover_search(oracle, rng, 7);
  CHECK(oracle.queries() == 7);
}

TEST_CASE("measured frequency at n = 6 stays within 5 sigma of the analytic value") {
  const std::size_t n = 6;
  const std::uint64_t w = 42;
  const double p = success_probability(n, 6);
  Rng rng(2718);
  SearchOracle oracle(n, w);
  const int runs = 100000;
  int hits = 0;
  for (int i = 0; i < runs; ++i) hits += grover_search(oracle, rng, 6).found == w;
  const double sigma = std::sqrt(runs * p * (1.0 - p));
  CHECK(std::abs(hits - runs * p) <= 5.0 * sigma);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(SearchOracle(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(SearchOracle(3, 8), std::out_of_range);
  SearchOracle one(1, 0);
  Rng rng(0);
  CHECK_THROWS(grover_search(one, rng));
  SearchOracle three(3, 1);
  StateVector wrong = StateVector::uniform(4);
  CHECK_THROWS(oracle_phase_flip(wrong, three));
}
