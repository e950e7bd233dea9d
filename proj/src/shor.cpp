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

#include "qubitkit/shor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qubitkit/gates.hpp"
#include "qubitkit/qft.hpp"

namespace qubitkit::shor {
namespace {

std::vector<std::size_t> span_qubits(std::size_t first, std::size_t width) {
  std::vector<std::size_t> q(width);
  std::iota(q.begin(), q.end(), first);
  return q;
}

}  // namespace

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

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 4) return 0;
  for (std::uint64_t b = 2; b * b <= n; ++b) {
    if (n % b != 0) continue;
    std::uint64_t m = n;
    while (m % b == 0) m /= b;
    return (m == 1 && is_prime(b)) ? b : 0;
  }
  return 0;
}

std::string to_string(FactorFailure f) {
  return f == FactorFailure::OddPeriod ? "odd-period" : "trivial-root";
}

FactoringInstance make_instance(std::uint64_t n, std::uint64_t a, std::size_t x_width) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("N must be odd and greater than 2");
  if (is_prime(n)) throw std::invalid_argument(std::to_string(n) + " is prime");
  if (const auto b = prime_power_base(n); b != 0) {
    throw std::invalid_argument(std::to_string(n) + " is a power of the prime " +
                                std::to_string(b));
  }
  if (a <= 1 || a >= n) throw std::invalid_argument("base a must satisfy 1 < a < N");
  if (std::gcd(a, n) != 1) {
    throw std::invalid_argument("gcd(" + std::to_string(a) + ", " + std::to_string(n) +
                                ") != 1");
  }
  FactoringInstance inst;
  inst.n = n;
  inst.a = a;
  inst.f_width = static_cast<std::size_t>(std::bit_width(n - 1));
  inst.x_width = x_width == 0 ? 2 * inst.f_width : x_width;
  if (inst.total_qubits() > kMaxShorQubits) {
    throw std::length_error("period finding for N=" + std::to_string(n) + " needs " +
                            std::to_string(inst.total_qubits()) + " qubits, capacity is " +
                            std::to_string(kMaxShorQubits));
  }
  return inst;
}

StateVector prepare_modexp_state(const FactoringInstance& inst) {
  const std::size_t total = inst.total_qubits();
  std::vector<Complex> amps(std::size_t{1} << total);
  const std::uint64_t xs = std::uint64_t{1} << inst.x_width;
  const double amp = 1.0 / std::sqrt(double(xs));
  for (std::uint64_t x = 0; x < xs; ++x) amps[x] = amp;
  StateVector state(total, std::move(amps));

  const auto f = ReversibleFunction::modexp(inst.a, inst.n, inst.x_width);
  apply_function_xor(state, f, QubitSpan{0, inst.x_width}, QubitSpan{inst.x_width, inst.f_width});
  return state;
}

std::uint64_t run_period_finding(const FactoringInstance& inst, Rng& rng,
                                 const PeriodFindingOptions& options) {
  StateVector state = prepare_modexp_state(inst);
  if (options.premeasure) {
    const auto fq = span_qubits(inst.x_width, inst.f_width);
    measure_subset(state, fq, rng);
  }
  apply_qft(state, QftSpec{QubitSpan{0, inst.x_width}, QftDirection::Forward});
  const auto xq = span_qubits(0, inst.x_width);
  return measure_subset(state, xq, rng).value;
}

std::vector<double> period_finding_distribution(const FactoringInstance& inst) {
  StateVector state = prepare_modexp_state(inst);
  apply_qft(state, QftSpec{QubitSpan{0, inst.x_width}, QftDirection::Forward});
  const auto xq = span_qubits(0, inst.x_width);
  return marginal_probabilities(state, xq);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> convergents(std::uint64_t value,
                                                                 std::size_t width) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::uint64_t num = value;
  std::uint64_t den = std::uint64_t{1} << width;
  std::uint64_t h_prev = 1, h_prev2 = 0;
  std::uint64_t k_prev = 0, k_prev2 = 1;
  while (den != 0) {
    const std::uint64_t q = num / den;
    const std::uint64_t h = q * h_prev + h_prev2;
    const std::uint64_t k = q * k_prev + k_prev2;
    out.emplace_back(h, k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const std::uint64_t rem = num % den;
    num = den;
    den = rem;
  }
  return out;
}

std::optional<PeriodEstimate> extract_period(std::span<const std::uint64_t> measurements,
                                             std::size_t x_width, std::uint64_t n,
                                             std::uint64_t a) {
  struct Source {
    std::uint64_t measured, numerator, denominator;
  };
  std::vector<Source> sources;
  std::set<std::uint64_t> candidates;
  for (std::uint64_t m : measurements) {
    if (m == 0) continue;
    for (const auto& [p, q] : convergents(m, x_width)) {
      if (q == 0 || q >= n) continue;
      if (candidates.insert(q).second) sources.push_back({m, p, q});
    }
  }
  // Close the candidate set under lcm, keeping values that can still be a period.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint64_t> current(candidates.begin(), candidates.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const std::uint64_t l = std::lcm(current[i], current[j]);
        if (l <= n && candidates.insert(l).second) grew = true;
      }
    }
  }
  for (std::uint64_t r : candidates) {
    if (pow_mod(a, r, n) != 1) continue;
    PeriodEstimate est;
    est.period = r;
    // Report the largest contributing convergent.
    for (const Source& s : sources) {
      if (r % s.denominator == 0 && s.denominator >= est.denominator) {
        est.measured = s.measured;
        est.numerator = s.numerator;
        est.denominator = s.denominator;
      }
    }
    return est;
  }
  return std::nullopt;
}

FactorResult extract_factors(std::uint64_t n, std::uint64_t a, std::uint64_t r) {
  if (r == 0 || pow_mod(a, r, n) != 1) {
    throw std::invalid_argument(std::to_string(a) + "^" + std::to_string(r) + " is not 1 mod " +
                                std::to_string(n));
  }
  FactorResult result;
  // A multiple of the period still satisfies a^r = 1; reduce it first.
  while (r % 2 == 0 && pow_mod(a, r / 2, n) == 1) r /= 2;
  if (r % 2 == 1) {
    result.failure = FactorFailure::OddPeriod;
    return result;
  }
  const std::uint64_t half = pow_mod(a, r / 2, n);
  if (half == n - 1) {
    result.failure = FactorFailure::TrivialRoot;
    return result;
  }
  // half is neither 1 nor -1, so both gcds are proper factors.
  result.factors = std::make_pair(std::gcd(half + n - 1, n), std::gcd(half + 1, n));
  return result;
}

FactorReport factor(std::uint64_t n, Rng& rng, const FactorOptions& options) {
  FactorReport report;
  report.n = n;
  if (n < 4 || is_prime(n)) {
    throw std::invalid_argument(std::to_string(n) + " is not composite");
  }
  if (n % 2 == 0) {
    report.success = true;
    report.p = 2;
    report.q = n / 2;
    report.method = "even";
    return report;
  }
  if (const std::uint64_t b = prime_power_base(n); b != 0) {
    report.success = true;
    report.p = b;
    report.q = n / b;
    report.method = "prime-power";
    return report;
  }
  if (options.base && (*options.base <= 1 || *options.base >= n)) {
    throw std::invalid_argument("base a must satisfy 1 < a < N");
  }

  const auto finish = [&](std::uint64_t p) {
    report.success = true;
    report.p = std::min(p, n / p);
    report.q = std::max(p, n / p);
    report.method = "quantum";
  };

  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    Attempt rec;
    rec.a = options.base ? *options.base : uniform_int(rng, 2, n - 1);
    if (const std::uint64_t g = std::gcd(rec.a, n); g != 1) {
      rec.outcome = "lucky-gcd";
      report.attempts.push_back(rec);
      finish(g);
      report.method = "lucky-gcd";
      return report;
    }

    const FactoringInstance inst = make_instance(n, rec.a);
    rec.outcome = "no-period";
    for (std::size_t run = 0; run < options.runs_per_base; ++run) {
      rec.measured.push_back(run_period_finding(inst, rng, {options.premeasure}));
      const auto est = extract_period(rec.measured, inst.x_width, n, rec.a);
      if (!est) continue;
      rec.period = est->period;
      const FactorResult fr = extract_factors(n, rec.a, est->period);
      if (fr.factors) {
        const auto [p, q] = *fr.factors;
        if (n % p != 0 || n % q != 0) {
          throw std::logic_error("extracted factor does not divide N");
        }
        rec.outcome = "success";
        report.attempts.push_back(rec);
        finish(p);
        return report;
      }
      rec.outcome = to_string(*fr.failure);
      break;
    }
    report.attempts.push_back(std::move(rec));
  }
  return report;
}

}  // namespace qubitkit::shor
