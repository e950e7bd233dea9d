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
 * Period finding for f(x) = a^x mod N and the classical reduction from
 * factoring to period finding.
 *
 * Register layout: the x register occupies qubits [0, l), the function
 * register qubits [l, l + bit_width(N - 1)). l defaults to twice the function
 * width so that 2^l exceeds the square of any period r < N.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qubitkit/random.hpp"
#include "qubitkit/statevec.hpp"

namespace qubitkit::shor {

/// Largest register period finding will allocate.
inline constexpr std::size_t kMaxShorQubits = 26;

struct FactoringInstance {
  std::uint64_t n = 0;
  std::uint64_t a = 0;
  std::size_t x_width = 0;
  std::size_t f_width = 0;

  std::size_t total_qubits() const noexcept { return x_width + f_width; }
};

/// Validates 1 < a < N, gcd(a, N) = 1, N odd, composite and not a prime power.
/// `x_width` of zero selects 2 * bit_width(N - 1).
FactoringInstance make_instance(std::uint64_t n, std::uint64_t a, std::size_t x_width = 0);

struct PeriodFindingOptions {
  /// Measure the function register before the QFT. The first-register
  /// statistics are the same either way.
  bool premeasure = true;
};

/// Prepared superposition sum_x |x, a^x mod N> / sqrt(2^l).
StateVector prepare_modexp_state(const FactoringInstance& inst);

/// One quantum run; returns the measured x-register index m.
std::uint64_t run_period_finding(const FactoringInstance& inst, Rng& rng,
                                 const PeriodFindingOptions& options = {});

/// Exact distribution of m (no premeasurement), computed from the simulated
/// post-QFT register.
std::vector<double> period_finding_distribution(const FactoringInstance& inst);

struct PeriodEstimate {
  std::uint64_t period = 0;
  /// Measurement whose convergent produced a factor of the period.
  std::uint64_t measured = 0;
  /// Convergent numerator/denominator of measured / 2^l used.
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
};

/// Convergents p/q of value / 2^width, in order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> convergents(std::uint64_t value,
                                                                 std::size_t width);

/// Smallest r with a^r = 1 mod N among the convergent denominators (< N) of
/// all measurements and their least common multiples. Zero measurements are
/// skipped; std::nullopt means the caller should retry.
std::optional<PeriodEstimate> extract_period(std::span<const std::uint64_t> measurements,
                                             std::size_t x_width, std::uint64_t n,
                                             std::uint64_t a);

enum class FactorFailure { OddPeriod, TrivialRoot };

struct FactorResult {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
  std::optional<FactorFailure> failure;
};

/// gcd(a^{r/2} - 1, N), gcd(a^{r/2} + 1, N); requires a^r = 1 mod N.
FactorResult extract_factors(std::uint64_t n, std::uint64_t a, std::uint64_t r);

struct Attempt {
  std::uint64_t a = 0;
  std::vector<std::uint64_t> measured;
  std::optional<std::uint64_t> period;
  /// success, lucky-gcd, no-period, odd-period, trivial-root
  std::string outcome;
};

struct FactorOptions {
  std::size_t max_attempts = 20;
  /// Quantum runs per base before giving up on it; measurements of one base
  /// are pooled so periods can be assembled as lcms across runs.
  std::size_t runs_per_base = 2;
  bool premeasure = true;
  /// Fixed base instead of random draws.
  std::optional<std::uint64_t> base;
};

struct FactorReport {
  std::uint64_t n = 0;
  bool success = false;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  /// quantum, even, prime-power; set when success.
  std::string method;
  std::vector<Attempt> attempts;
};

/// Factors an odd composite N. Even N and prime powers are resolved by the
/// classical precheck without any quantum run. Primes are rejected.
FactorReport factor(std::uint64_t n, Rng& rng, const FactorOptions& options = {});

// Classical helpers shared with the tests.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
bool is_prime(std::uint64_t n);
/// Returns b if n = b^k for some k >= 2 with b prime, else 0.
std::uint64_t prime_power_base(std::uint64_t n);

std::string to_string(FactorFailure f);

}  // namespace qubitkit::shor
