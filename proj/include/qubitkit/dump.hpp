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

#include <iosfwd>

#include "qubitkit/statevec.hpp"

namespace qubitkit {

/// Writes one line per nonzero amplitude as `index<TAB>re<TAB>im`, indices
/// ascending, with enough digits to round-trip a double.
void write_dump(std::ostream& out, const StateVector& state);

/// Reads the dump format back into a `num_qubits` register. Blank lines and
/// lines starting with `#` are skipped; missing indices are zero. Inputs whose
/// squared norm is off by more than 1e-9 but within 1e-6 are rescaled to unit
/// norm, anything further off is rejected.
StateVector read_dump(std::istream& in, std::size_t num_qubits);

}  // namespace qubitkit
