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

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qubitkit/gates.hpp"

namespace qubitkit {
namespace {

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
  throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": " + why);
}

std::size_t read_qubit(std::istringstream& in, std::size_t line_no) {
  long long q;
  if (!(in >> q) || q < 0) bad_line(line_no, "expected a qubit index");
  return static_cast<std::size_t>(q);
}

double read_real(std::istringstream& in, std::size_t line_no) {
  double v;
  if (!(in >> v)) bad_line(line_no, "expected a number");
  return v;
}

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Circuit parse_circuit(std::istream& in, std::size_t num_qubits) {
  Circuit circuit(num_qubits);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string op;
    if (!(fields >> op) || op[0] == '#') continue;

    GateOp gate = NotGate{0};
    if (op == "NOT") {
      gate = NotGate{read_qubit(fields, line_no)};
    } else if (op == "CNOT") {
      const auto c = read_qubit(fields, line_no);
      gate = CnotGate{c, read_qubit(fields, line_no)};
    } else if (op == "CCNOT") {
      const auto c1 = read_qubit(fields, line_no);
      const auto c2 = read_qubit(fields, line_no);
      gate = CcnotGate{c1, c2, read_qubit(fields, line_no)};
    } else if (op == "H") {
      gate = HadamardGate{read_qubit(fields, line_no)};
    } else if (op == "CPHASE") {
      const auto c = read_qubit(fields, line_no);
      const auto t = read_qubit(fields, line_no);
      gate = ControlledPhaseGate{c, t, read_real(fields, line_no)};
    } else if (op == "U2") {
      const auto q = read_qubit(fields, line_no);
      Matrix2 m;
      for (Complex& z : m) {
        const double re = read_real(fields, line_no);
        z = Complex(re, read_real(fields, line_no));
      }
      try {
        gate = U2Gate(q, m);
      } catch (const std::invalid_argument& e) {
        bad_line(line_no, e.what());
      }
    } else {
      bad_line(line_no, "unknown gate `" + op + "`");
    }
    std::string extra;
    if (fields >> extra) bad_line(line_no, "trailing input `" + extra + "`");
    try {
      circuit.add(std::move(gate));
    } catch (const std::exception& e) {
      bad_line(line_no, e.what());
    }
  }
  return circuit;
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  for (const GateOp& g : circuit.gates()) {
    if (const auto* x = std::get_if<NotGate>(&g)) {
      out << "NOT " << x->target;
    } else if (const auto* x = std::get_if<CnotGate>(&g)) {
      out << "CNOT " << x->control << ' ' << x->target;
    } else if (const auto* x = std::get_if<CcnotGate>(&g)) {
      out << "CCNOT " << x->control1 << ' ' << x->control2 << ' ' << x->target;
    } else if (const auto* x = std::get_if<HadamardGate>(&g)) {
      out << "H " << x->target;
    } else if (const auto* x = std::get_if<ControlledPhaseGate>(&g)) {
      out << "CPHASE " << x->control << ' ' << x->target << ' ' << fmt_real(x->angle);
    } else if (const auto* x = std::get_if<U2Gate>(&g)) {
      out << "U2 " << x->target();
      for (const Complex& z : x->matrix()) out << ' ' << fmt_real(z.real()) << ' ' << fmt_real(z.imag());
    }
    out << '\n';
  }
}

}  // namespace qubitkit
