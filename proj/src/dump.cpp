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

#include "qubitkit/dump.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qubitkit {

void write_dump(std::ostream& out, const StateVector& state) {
  const auto amps = state.amplitudes();
  char line[96];
  for (std::uint64_t n = 0; n < amps.size(); ++n) {
    if (amps[n] == Complex{}) continue;
    std::snprintf(line, sizeof line, "%llu\t%.17g\t%.17g\n", static_cast<unsigned long long>(n),
                  amps[n].real(), amps[n].imag());
    out << line;
  }
}

StateVector read_dump(std::istream& in, std::size_t num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("dump register size out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  std::vector<Complex> amps(dim);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::uint64_t index;
    double re, im;
    if (!(fields >> index >> re >> im)) {
      throw std::invalid_argument("dump line " + std::to_string(line_no) +
                                  ": expected `index re im`");
    }
    if (index >= dim) {
      throw std::out_of_range("dump line " + std::to_string(line_no) + ": index " +
                              std::to_string(index) + " does not fit " +
                              std::to_string(num_qubits) + " qubits");
    }
    amps[index] = Complex(re, im);
  }
  double norm = 0.0;
  for (const Complex& c : amps) norm += std::norm(c);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw std::domain_error("dump is not normalized (squared norm " + std::to_string(norm) + ")");
  }
  if (std::abs(norm - 1.0) <= kNormTolerance) return StateVector(num_qubits, std::move(amps));
  return StateVector::normalized(std::move(amps));
}

}  // namespace qubitkit
