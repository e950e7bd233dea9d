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

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qubitkit/dump.hpp"
#include "qubitkit/statevec.hpp"
#include "test_util.hpp"

using namespace qubitkit;
using qubitkit::testing::random_state;

TEST_CASE("basis states") {
  const auto s0 = StateVector::basis(1, 0);
  CHECK(s0[0] == Complex(1.0));
  CHECK(s0[1] == Complex(0.0));

  const auto s3 = StateVector::basis(2, 3);
  for (std::uint64_t n = 0; n < 4; ++n) CHECK(s3[n] == Complex(n == 3 ? 1.0 : 0.0));

  CHECK_THROWS_AS(StateVector::basis(3, 8), std::out_of_range);
  CHECK_THROWS_AS(StateVector::basis(0, 0), std::invalid_argument);
}

TEST_CASE("uniform superposition") {
  for (std::size_t l = 1; l <= 3; ++l) {
    const auto s = StateVector::uniform(l);
    const double expected = 1.0 / std::sqrt(double(1U << l));
    for (const Complex& c : s.amplitudes()) CHECK(std::abs(c - expected) < 1e-15);
  }
  CHECK(StateVector::uniform(2)[1].real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS(StateVector::uniform(0));
}

TEST_CASE("constructor rejects wrong size and bad norm") {
  CHECK_THROWS_AS(StateVector(2, std::vector<Complex>(3)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(1, std::vector<Complex>{1.0, 1.0}), std::domain_error);
  CHECK_THROWS(StateVector::normalized(std::vector<Complex>(4, 0.0)));
  CHECK_THROWS(StateVector::normalized(std::vector<Complex>(3, 1.0)));
}

TEST_CASE("fidelity") {
  const auto zero = StateVector::basis(1, 0);
  const auto one = StateVector::basis(1, 1);
  CHECK(fidelity(zero, zero) == 1.0);
  CHECK(fidelity(zero, one) == 0.0);
  for (double theta : {0.3, 1.7, -2.9}) {
    const StateVector phased(1, {std::polar(1.0, theta), 0.0});
    CHECK(fidelity(zero, phased) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(fidelity(zero, StateVector::basis(2, 0)), std::invalid_argument);
}

TEST_CASE("fidelity is symmetric and detects global phases on random states") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_state(5, rng);
    const auto b = random_state(5, rng);
    CHECK(std::abs(fidelity(a, b) - fidelity(b, a)) < 1e-12);
    CHECK(fidelity(a, b) < 1.0 - 1e-9);

    std::vector<Complex> rotated(a.amplitudes().begin(), a.amplitudes().end());
    const Complex phase = std::polar(1.0, 2 * std::numbers::pi * uniform01(rng));
    for (Complex& c : rotated) c *= phase;
    CHECK(std::abs(fidelity(a, StateVector(5, rotated)) - 1.0) < 1e-9);
  }
}

TEST_CASE("measure_all on basis states is deterministic and idempotent") {
  Rng rng(1);
  auto s = StateVector::basis(3, 5);
  for (int i = 0; i < 10; ++i) {
    const auto out = measure_all(s, rng);
    CHECK(out.basis_index == 5);
    CHECK(out.bits == std::vector<std::uint8_t>{1, 0, 1});
    CHECK(fidelity(s, StateVector::basis(3, 5)) == 1.0);
  }
}

TEST_CASE("measure_all frequencies on the uniform state stay within 5 sigma") {
  Rng rng(2024);
  const int samples = 100000;
  std::array<int, 4> counts{};
  for (int i = 0; i < samples; ++i) {
    auto s = StateVector::uniform(2);
    const auto out = measure_all(s, rng);
    ++counts[out.basis_index];
    // bits re-encode the index
    CHECK_EQ(out.bits[0] + 2 * out.bits[1], int(out.basis_index));
  }
  const double sigma = std::sqrt(samples * 0.25 * 0.75);
  for (int c : counts) CHECK(std::abs(c - samples * 0.25) < 5 * sigma);
}

TEST_CASE("measure_all on (|0> + i|1>)/sqrt2 is a fair coin") {
  Rng rng(5);
  const double h = 1.0 / std::sqrt(2.0);
  const int samples = 20000;
  int ones = 0;
  for (int i = 0; i < samples; ++i) {
    StateVector s(1, {h, Complex(0, h)});
    const auto out = measure_all(s, rng);
    ones += int(out.basis_index);
    CHECK(s[out.basis_index] == Complex(1.0));
  }
  CHECK(std::abs(ones - samples / 2.0) < 5 * std::sqrt(samples * 0.25));
}

TEST_CASE("measurement rejects unnormalized input") {
  StateVector s = StateVector::basis(1, 0);
  s.mutable_amplitudes()[0] = 0.9;
  Rng rng(0);
  CHECK_THROWS_AS(measure_all(s, rng), std::domain_error);
}

TEST_CASE("measure_subset") {
  Rng rng(3);
  SUBCASE("basis state") {
    auto s = StateVector::basis(2, 2);  // qubit1 = 1
    const std::array<std::size_t, 1> q{1};
    const auto out = measure_subset(s, q, rng);
    CHECK(out.bits == std::vector<std::uint8_t>{1});
    CHECK(fidelity(s, StateVector::basis(2, 2)) == 1.0);
  }
  SUBCASE("Bell state collapses both qubits") {
    const double h = 1.0 / std::sqrt(2.0);
    int ones = 0;
    for (int i = 0; i < 4000; ++i) {
      StateVector s(2, {h, 0.0, 0.0, h});
      const std::array<std::size_t, 1> q{0};
      const auto out = measure_subset(s, q, rng);
      const std::uint64_t expected = out.bits[0] ? 3 : 0;
      CHECK(std::abs(fidelity(s, StateVector::basis(2, expected)) - 1.0) < 1e-15);
      ones += out.bits[0];
    }
    CHECK(std::abs(ones - 2000) < 5 * std::sqrt(1000.0));
  }
  SUBCASE("uniform state projected on qubit 2") {
    auto s = StateVector::uniform(3);
    const std::array<std::size_t, 1> q{2};
    const auto out = measure_subset(s, q, rng);
    for (std::uint64_t n = 0; n < 8; ++n) {
      const double expected = (((n >> 2) & 1U) == out.bits[0]) ? 0.5 : 0.0;
      CHECK(std::abs(s[n] - expected) < 1e-15);
    }
    CHECK(std::abs(s.norm_squared() - 1.0) < kNormTolerance);
  }
  SUBCASE("invalid qubit sets") {
    auto s = StateVector::uniform(3);
    CHECK_THROWS_AS(measure_subset(s, std::span<const std::size_t>{}, rng), std::invalid_argument);
    const std::array<std::size_t, 2> dup{1, 1};
    CHECK_THROWS_AS(measure_subset(s, dup, rng), std::invalid_argument);
    const std::array<std::size_t, 1> oob{3};
    CHECK_THROWS_AS(measure_subset(s, oob, rng), std::out_of_range);
  }
}

TEST_CASE("measure_subset over all qubits matches measure_all in distribution") {
  // Chi-squared two-sample test on a fixed random 3-qubit state.
  Rng setup(99);
  const auto state = random_state(3, setup);
  const int samples = 100000;
  std::array<double, 8> a{}, b{};
  Rng rng_a(1), rng_b(2);
  const std::array<std::size_t, 3> all{0, 1, 2};
  for (int i = 0; i < samples; ++i) {
    auto s1 = state;
    a[measure_all(s1, rng_a).basis_index] += 1;
    auto s2 = state;
    b[measure_subset(s2, all, rng_b).value] += 1;
  }
  double chi2 = 0.0;
  int dof = -1;
  for (int k = 0; k < 8; ++k) {
    if (a[k] + b[k] == 0) continue;
    chi2 += (a[k] - b[k]) * (a[k] - b[k]) / (a[k] + b[k]);
    ++dof;
  }
  // 0.999 quantile of chi-squared with 7 degrees of freedom
  REQUIRE(dof == 7);
  CHECK(chi2 < 24.322);
}

TEST_CASE("norm is preserved after measurement collapse") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = random_state(6, rng);
    const std::array<std::size_t, 2> q{1, 4};
    measure_subset(s, q, rng);
    CHECK(std::abs(s.norm_squared() - 1.0) < kNormTolerance);
  }
}

TEST_CASE("dump format") {
  const double h = 1.0 / std::sqrt(2.0);
  const StateVector s(2, {h, 0.0, 0.0, Complex(0, -h)});
  std::ostringstream out;
  write_dump(out, s);
  CHECK(out.str() == "0\t0.70710678118654746\t0\n3\t0\t-0.70710678118654746\n");

  std::istringstream in("# comment\n" + out.str());
  const auto back = read_dump(in, 2);
  for (std::uint64_t n = 0; n < 4; ++n) CHECK(back[n] == s[n]);

  std::istringstream bad_index("4\t1\t0\n");
  CHECK_THROWS_AS(read_dump(bad_index, 2), std::out_of_range);
  std::istringstream bad_norm("0\t0.5\t0\n");
  CHECK_THROWS_AS(read_dump(bad_norm, 2), std::domain_error);
  std::istringstream garbage("0 one 0\n");
  CHECK_THROWS_AS(read_dump(garbage, 2), std::invalid_argument);
}

TEST_CASE("dump round-trips random states bit-exactly") {
  Rng rng(21);
  for (int i = 0; i < 5; ++i) {
    const auto s = random_state(4, rng);
    std::stringstream io;
    write_dump(io, s);
    const auto back = read_dump(io, 4);
    CHECK(fidelity(s, back) == doctest::Approx(1.0).epsilon(1e-15));
    for (std::uint64_t n = 0; n < s.size(); ++n) CHECK(std::abs(back[n] - s[n]) < 1e-15);
  }
}
