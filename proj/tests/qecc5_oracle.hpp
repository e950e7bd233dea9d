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

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qubitkit/statevec.hpp"

namespace qubitkit::testing {

/// Pauli operator on five qubits in binary symplectic form, phases dropped.
struct Symplectic {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  static Symplectic from_string(std::string_view s) {
    Symplectic p;
    for (std::size_t q = 0; q < s.size(); ++q) {
      if (s[q] == 'X' || s[q] == 'Y') p.x |= 1U << q;
      if (s[q] == 'Z' || s[q] == 'Y') p.z |= 1U << q;
    }
    return p;
  }
  Symplectic operator*(const Symplectic& o) const { return {x ^ o.x, z ^ o.z}; }
  bool operator==(const Symplectic&) const = default;
  bool anticommutes(const Symplectic& o) const {
    return (std::popcount(x & o.z) + std::popcount(z & o.x)) % 2 == 1;
  }
  int weight() const { return std::popcount(x | z); }
};

inline const std::array<std::string_view, 4> kGenerators{"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};

inline std::uint8_t symplectic_syndrome(const Symplectic& e) {
  std::uint8_t s = 0;
  for (std::size_t g = 0; g < 4; ++g) {
    if (e.anticommutes(Symplectic::from_string(kGenerators[g]))) s |= std::uint8_t(1U << g);
  }
  return s;
}

/// The 16 elements of the stabilizer group.
inline std::vector<Symplectic> stabilizer_group() {
  std::vector<Symplectic> group;
  for (unsigned mask = 0; mask < 16; ++mask) {
    Symplectic p;
    for (std::size_t g = 0; g < 4; ++g) {
      if (mask & (1U << g)) p = p * Symplectic::from_string(kGenerators[g]);
    }
    group.push_back(p);
  }
  return group;
}

/// Applies a Pauli string (character q acts on qubit q) to raw amplitudes.
inline std::vector<Complex> apply_pauli_string(std::vector<Complex> amps, std::string_view s) {
  for (std::size_t q = 0; q < s.size(); ++q) {
    const std::uint64_t b = std::uint64_t{1} << q;
    std::vector<Complex> next(amps.size());
    for (std::uint64_t n = 0; n < amps.size(); ++n) {
      const bool one = (n & b) != 0;
      switch (s[q]) {
        case 'X': next[n ^ b] = amps[n]; break;
        case 'Z': next[n] = one ? -amps[n] : amps[n]; break;
        case 'Y': next[n ^ b] = one ? Complex(0, -1) * amps[n] : Complex(0, 1) * amps[n]; break;
        default: next[n] = amps[n]; break;
      }
    }
    amps = std::move(next);
  }
  return amps;
}

/// Normalized projection of a basis state onto the common +1 eigenspace.
inline std::vector<Complex> project_codeword(std::uint64_t basis) {
  std::vector<Complex> v(32, 0.0);
  v[basis] = 1.0;
  for (std::string_view g : kGenerators) {
    const auto gv = apply_pauli_string(v, g);
    for (std::size_t n = 0; n < 32; ++n) v[n] = 0.5 * (v[n] + gv[n]);
  }
  double norm = 0.0;
  for (const Complex& c : v) norm += std::norm(c);
  for (Complex& c : v) c /= std::sqrt(norm);
  return v;
}

/// Exact failure probability of syndrome decoding under independent
/// single-qubit depolarizing noise: sum over all 4^5 Pauli patterns whose
/// product with the weight-<=1 correction is not a stabilizer.
inline double exact_failure_rate(double p) {
  std::array<Symplectic, 16> correction{};
  const char kinds[3] = {'X', 'Z', 'Y'};
  for (std::size_t q = 0; q < 5; ++q) {
    for (char k : kinds) {
      std::string s(5, 'I');
      s[q] = k;
      const Symplectic e = Symplectic::from_string(s);
      correction[symplectic_syndrome(e)] = e;
    }
  }
  const auto group = stabilizer_group();
  double rate = 0.0;
  for (std::uint32_t pattern = 0; pattern < 1024; ++pattern) {
    std::string s(5, 'I');
    double prob = 1.0;
    for (std::size_t q = 0; q < 5; ++q) {
      const std::uint32_t k = (pattern >> (2 * q)) & 3U;
      s[q] = "IXZY"[k];
      prob *= k == 0 ? 1.0 - p : p / 3.0;
    }
    const Symplectic e = Symplectic::from_string(s);
    const Symplectic residual = e * correction[symplectic_syndrome(e)];
    bool harmless = false;
    for (const Symplectic& g : group) harmless = harmless || g == residual;
    if (!harmless) rate += prob;
  }
  return rate;
}

}  // namespace qubitkit::testing
