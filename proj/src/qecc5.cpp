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

#include "qubitkit/qecc5.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qubitkit::qecc5 {
namespace {

constexpr std::size_t kDim = std::size_t{1} << kCodeQubits;

// Pauli string i^{y} X^{x} Z^{z}, with y = popcount(x & z) so that each Y
// factor is the Hermitian iXZ.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
};

constexpr PauliString parse_string(const char (&s)[6]) {
  PauliString p;
  for (std::uint32_t q = 0; q < 5; ++q) {
    if (s[q] == 'X' || s[q] == 'Y') p.x |= 1U << q;
    if (s[q] == 'Z' || s[q] == 'Y') p.z |= 1U << q;
  }
  return p;
}

constexpr std::array<PauliString, 4> kGenerators{
    parse_string("XZZXI"), parse_string("IXZZX"), parse_string("XIXZZ"), parse_string("ZXIXZ")};

PauliString to_string_op(const PauliError& e) {
  const std::uint32_t b = 1U << e.qubit;
  switch (e.kind) {
    case PauliKind::I: return {};
    case PauliKind::X: return {b, 0};
    case PauliKind::Z: return {0, b};
    case PauliKind::Y: return {b, b};
  }
  return {};
}

bool anticommute(PauliString a, PauliString b) {
  return std::popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 1;
}

using Vec = std::array<Complex, kDim>;

Vec apply_string(PauliString p, std::span<const Complex> in) {
  static constexpr std::array<Complex, 4> kIPow{Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                                                Complex(0, -1)};
  const Complex prefactor = kIPow[std::popcount(p.x & p.z) % 4];
  Vec out{};
  for (std::uint32_t n = 0; n < kDim; ++n) {
    const double sign = std::popcount(n & p.z) % 2 ? -1.0 : 1.0;
    out[n ^ p.x] = prefactor * sign * in[n];
  }
  return out;
}

StateVector to_state(const Vec& v) { return StateVector(kCodeQubits, std::vector<Complex>(v.begin(), v.end())); }

Vec project_onto_code(Vec v) {
  for (const PauliString& g : kGenerators) {
    const Vec gv = apply_string(g, v);
    for (std::size_t n = 0; n < kDim; ++n) v[n] = 0.5 * (v[n] + gv[n]);
  }
  double norm = 0.0;
  for (const Complex& c : v) norm += std::norm(c);
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& c : v) c *= scale;
  return v;
}

struct Code {
  StateVector zero;
  StateVector one;
  std::array<Syndrome, kNumErrors> syndromes{};
  std::array<std::size_t, kNumErrors> error_by_syndrome{};
  // Row b + 2 s of the syndrome-reading unitary is <E_s b_L|.
  std::array<Vec, kDim> reader_rows{};

  Code() : zero(build(0)), one(build(kDim - 1)) {
    std::array<bool, kNumErrors> taken{};
    for (std::size_t i = 0; i < kNumErrors; ++i) {
      const PauliString e = to_string_op(PauliError::from_index(i));
      std::uint8_t s = 0;
      for (std::size_t g = 0; g < kGenerators.size(); ++g) {
        if (anticommute(e, kGenerators[g])) s |= std::uint8_t(1U << g);
      }
      if (taken[s]) throw std::logic_error("syndrome table is not injective");
      taken[s] = true;
      syndromes[i] = Syndrome{s};
      error_by_syndrome[s] = i;

      for (std::size_t b = 0; b < 2; ++b) {
        const Vec image = apply_string(e, (b == 0 ? zero : one).amplitudes());
        Vec& row = reader_rows[b + 2 * s];
        for (std::size_t n = 0; n < kDim; ++n) row[n] = std::conj(image[n]);
      }
    }
  }

  static StateVector build(std::uint32_t seed_index) {
    Vec v{};
    v[seed_index] = 1.0;
    return to_state(project_onto_code(v));
  }
};

const Code& code() {
  static const Code instance;
  return instance;
}

void check_register(const StateVector& s) {
  if (s.num_qubits() != kCodeQubits) {
    throw std::invalid_argument("expected a 5-qubit register, got " +
                                std::to_string(s.num_qubits()));
  }
}

}  // namespace

// --- PauliError -------------------------------------------------------------

PauliError PauliError::from_index(std::size_t index) {
  if (index >= kNumErrors) throw std::out_of_range("error index out of range");
  if (index == 0) return {};
  const std::size_t k = (index - 1) / kCodeQubits;
  const std::size_t q = (index - 1) % kCodeQubits;
  constexpr std::array<PauliKind, 3> kinds{PauliKind::X, PauliKind::Z, PauliKind::Y};
  return PauliError{kinds[k], q};
}

std::size_t PauliError::index() const noexcept {
  switch (kind) {
    case PauliKind::I: return 0;
    case PauliKind::X: return 1 + qubit;
    case PauliKind::Z: return 1 + kCodeQubits + qubit;
    case PauliKind::Y: return 1 + 2 * kCodeQubits + qubit;
  }
  return 0;
}

std::string PauliError::name() const {
  switch (kind) {
    case PauliKind::I: return "I";
    case PauliKind::X: return "X" + std::to_string(qubit);
    case PauliKind::Z: return "Z" + std::to_string(qubit);
    case PauliKind::Y: return "Y" + std::to_string(qubit);
  }
  return "?";
}

PauliError PauliError::parse(const std::string& name) {
  for (const PauliError& e : all_errors()) {
    if (e.name() == name) return e;
  }
  throw std::invalid_argument("unknown error `" + name + "` (expected I, X0..X4, Z0..Z4, Y0..Y4)");
}

std::array<PauliError, kNumErrors> all_errors() {
  std::array<PauliError, kNumErrors> out;
  for (std::size_t i = 0; i < kNumErrors; ++i) out[i] = PauliError::from_index(i);
  return out;
}

Syndrome syndrome_of(const PauliError& e) { return code().syndromes[e.index()]; }

PauliError error_for(Syndrome s) {
  if (s.value >= kNumErrors) throw std::out_of_range("syndrome out of range");
  return PauliError::from_index(code().error_by_syndrome[s.value]);
}

void NoiseModel::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("error probability must be in [0, 1]");
  double total = 0.0;
  for (double w : kind_weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("kind weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("kind weights must sum to 1");
}

// --- Code -------------------------------------------------------------------

const StateVector& logical_zero() { return code().zero; }
const StateVector& logical_one() { return code().one; }

std::array<double, 4> stabilizer_expectations(const StateVector& state) {
  check_register(state);
  std::array<double, 4> out{};
  const auto amps = state.amplitudes();
  for (std::size_t g = 0; g < kGenerators.size(); ++g) {
    const Vec gv = apply_string(kGenerators[g], amps);
    Complex s = 0.0;
    for (std::size_t n = 0; n < kDim; ++n) s += std::conj(amps[n]) * gv[n];
    out[g] = s.real();
  }
  return out;
}

StateVector encode(const LogicalQubit& q) {
  const double norm = std::norm(q.alpha) + std::norm(q.beta);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::domain_error("logical qubit is not normalized (|a|^2+|b|^2 = " +
                            std::to_string(norm) + ")");
  }
  const auto z = logical_zero().amplitudes();
  const auto o = logical_one().amplitudes();
  std::vector<Complex> amps(kDim);
  for (std::size_t n = 0; n < kDim; ++n) amps[n] = q.alpha * z[n] + q.beta * o[n];
  return StateVector(kCodeQubits, std::move(amps));
}

void apply_error(StateVector& state, const PauliError& e) {
  check_register(state);
  if (e.qubit >= kCodeQubits) throw std::out_of_range("error qubit out of range");
  const Vec out = apply_string(to_string_op(e), state.amplitudes());
  auto amps = state.mutable_amplitudes();
  std::copy(out.begin(), out.end(), amps.begin());
}

SyndromeMeasurement syndrome_extract(const StateVector& state, Rng& rng) {
  check_register(state);
  if (std::abs(state.norm_squared() - 1.0) > 1e-6) {
    throw std::domain_error("cannot extract the syndrome of an unnormalized state");
  }
  const Code& c = code();
  const auto in = state.amplitudes();
  std::vector<Complex> rotated(kDim);
  for (std::size_t r = 0; r < kDim; ++r) {
    Complex s = 0.0;
    for (std::size_t n = 0; n < kDim; ++n) s += c.reader_rows[r][n] * in[n];
    rotated[r] = s;
  }
  StateVector frame = StateVector::normalized(std::move(rotated));
  static constexpr std::array<std::size_t, 4> kSyndromeQubits{1, 2, 3, 4};
  const SubsetOutcome bits = measure_subset(frame, kSyndromeQubits, rng);
  return {Syndrome{static_cast<std::uint8_t>(bits.value)}, std::move(frame)};
}

StateVector recover(const StateVector& collapsed, Syndrome syndrome) {
  check_register(collapsed);
  const Code& c = code();
  const auto in = collapsed.amplitudes();
  Vec back{};
  for (std::size_t r = 0; r < kDim; ++r) {
    if (in[r] == Complex{}) continue;
    for (std::size_t n = 0; n < kDim; ++n) back[n] += std::conj(c.reader_rows[r][n]) * in[r];
  }
  const Vec fixed = apply_string(to_string_op(error_for(syndrome)), back);
  return StateVector::normalized(std::vector<Complex>(fixed.begin(), fixed.end()));
}

double code_space_defect(const StateVector& state) {
  check_register(state);
  return 1.0 - std::norm(inner_product(logical_zero(), state)) -
         std::norm(inner_product(logical_one(), state));
}

LogicalQubit decode(const StateVector& codeword) {
  const double defect = code_space_defect(codeword);
  if (defect > 1e-6) {
    throw std::domain_error("state lies outside the code space (defect " +
                            std::to_string(defect) + ")");
  }
  LogicalQubit q{inner_product(logical_zero(), codeword), inner_product(logical_one(), codeword)};
  const double scale = 1.0 / std::sqrt(std::norm(q.alpha) + std::norm(q.beta));
  const Complex ref = std::abs(q.alpha) > 1e-12 ? q.alpha : q.beta;
  const Complex phase = std::conj(ref) / std::abs(ref);
  q.alpha *= phase * scale;
  q.beta *= phase * scale;
  if (std::abs(q.alpha) > 1e-12) q.alpha = std::abs(q.alpha);
  return q;
}

std::vector<PauliError> apply_noise(StateVector& state, const NoiseModel& model, Rng& rng) {
  model.validate();
  check_register(state);
  constexpr std::array<PauliKind, 3> kinds{PauliKind::X, PauliKind::Z, PauliKind::Y};
  std::vector<PauliError> hits;
  for (std::size_t q = 0; q < kCodeQubits; ++q) {
    if (!(uniform01(rng) < model.p)) continue;
    const double u = uniform01(rng);
    std::size_t k = 0;
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (model.kind_weights[i] == 0.0) continue;
      k = i;
      acc += model.kind_weights[i];
      if (u < acc) break;
    }
    const PauliError e{kinds[k], q};
    apply_error(state, e);
    hits.push_back(e);
  }
  return hits;
}

LogicalQubit random_logical(Rng& rng) {
  const double theta = std::acos(1.0 - 2.0 * uniform01(rng));
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  return LogicalQubit{std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

double logical_fidelity(const LogicalQubit& a, const LogicalQubit& b) {
  return std::norm(std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta);
}

RateEstimate logical_error_rate(const NoiseModel& model, std::uint64_t trials, std::uint64_t seed) {
  model.validate();
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  RateEstimate est;
  est.p = model.p;
  est.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = derive_stream(seed, t);
    const LogicalQubit q = random_logical(rng);
    StateVector state = encode(q);
    apply_noise(state, model, rng);
    const SyndromeMeasurement m = syndrome_extract(state, rng);
    const LogicalQubit out = decode(recover(m.collapsed, m.syndrome));
    if (logical_fidelity(q, out) < 1.0 - 1e-6) ++est.failures;
  }
  est.rate = double(est.failures) / double(trials);
  est.standard_error = std::sqrt(est.rate * (1.0 - est.rate) / double(trials));
  return est;
}

}  // namespace qubitkit::qecc5
