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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qubitkit::cli {

enum class OutputFormat { Human, Json, Csv };

struct ShorParams {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> a;
  bool premeasure = true;
  std::size_t attempts = 20;
};

struct GroverParams {
  std::size_t qubits = 0;
  std::uint64_t marked = 0;
  std::optional<std::uint64_t> iterations;
};

struct EvolveParams {
  std::size_t qubits = 0;
  double length = 0.0;
  double dt = 0.0;
  std::size_t steps = 0;
  std::string potential;
  std::string psi0;
  bool strang = false;
  double mass = 1.0;
  std::size_t every = 1;
  std::optional<std::string> trace_path;
  std::optional<std::string> dump_final;
};

struct QeccParams {
  std::string mode;  // roundtrip | montecarlo | empty with print_code
  std::optional<std::string> error;
  double p = 0.01;
  std::uint64_t trials = 100000;
  bool print_code = false;
};

struct QftParams {
  std::size_t qubits = 0;
  std::string input;
  bool inverse = false;
  std::optional<std::string> output;
};

struct RunConfig {
  std::string subcommand;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Human;
  ShorParams shor;
  GroverParams grover;
  EvolveParams evolve;
  QeccParams qecc;
  QftParams qft;
};

/// Invalid command line; the CLI exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; `what()` holds the help text and the CLI exits with 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// argv[0] is the program name. The seed falls back to QUBITKIT_SEED, then to
/// a fresh random value (always echoed in the report).
RunConfig parse_args(const std::vector<std::string>& argv);

/// Executes the configured run. Returns 0 on success, 1 on algorithmic
/// failure, 2 on a usage error discovered late (e.g. unreadable input file).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qubitkit::cli
