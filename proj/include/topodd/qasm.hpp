// Copyright 2026 The topodd authors
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

#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "topodd/sequences.hpp"

namespace topodd {

namespace detail {

inline std::string qasm_angle(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace detail

// Emits a single-qubit OpenQASM 3 program realizing the hardware protocol:
// an X preparation, `repetitions` copies of the decoupling block, a closing
// X, and a measurement. Each pulse is a rotation of angle pi*(1+xi) about
// the equatorial axis at azimuth phi_k, realized in the virtual-Z frame as
//
//   rz(-phi_k) q[0];  rx(pi*(1+xi)) q[0];  rz(phi_k) q[0];
//
// i.e. the frame is rotated onto the x axis, the fractional rx is applied,
// and the frame is restored.
inline std::string emit_qasm(const PhaseList &p, double xi,
                             int repetitions = 1, int shots = 512) {
  if (repetitions < 1) {
    throw std::invalid_argument("emit_qasm: repetitions must be >= 1");
  }
  if (shots < 1) {
    throw std::invalid_argument("emit_qasm: shots must be >= 1");
  }
  std::ostringstream os;
  os << "// sequence: " << p.name << "\n";
  os << "// pulse-area error xi: " << detail::qasm_angle(xi) << "\n";
  os << "// pulse pattern: rz(-phi_k) rx(pi*(1+xi)) rz(phi_k), a rotation\n";
  os << "// about the equatorial axis at azimuth phi_k\n";
  os << "// repetitions: " << repetitions << "\n";
  os << "// shots: " << shots << "\n";
  os << "OPENQASM 3.0;\n";
  os << "include \"stdgates.inc\";\n";
  os << "qubit[1] q;\n";
  os << "bit[1] c;\n";
  os << "x q[0];\n";
  const double theta = std::numbers::pi * (1.0 + xi);
  for (int rep = 0; rep < repetitions; ++rep) {
    for (const Phase &phi : p.phases) {
      const double angle = phi.radians();
      os << "rz(" << detail::qasm_angle(-angle) << ") q[0];\n";
      os << "rx(" << detail::qasm_angle(theta) << ") q[0];\n";
      os << "rz(" << detail::qasm_angle(angle) << ") q[0];\n";
    }
  }
  os << "x q[0];\n";
  os << "c[0] = measure q[0];\n";
  return os.str();
}

// Structural summary of an emitted program, for round-trip checks.
struct QasmCircuit {
  int x_gates = 0;
  int measurements = 0;
  std::vector<double> rx_angles;  // one per DD pulse, in program order
  std::vector<double> rz_angles;  // two per DD pulse, in program order
};

namespace detail {

inline double qasm_parse_angle(const std::string &stmt, std::size_t open) {
  const std::size_t close = stmt.find(')', open);
  if (close == std::string::npos) {
    throw std::runtime_error("qasm parse: unterminated angle");
  }
  const std::string tok = stmt.substr(open + 1, close - open - 1);
  const char *begin = tok.c_str();
  char *end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw std::runtime_error("qasm parse: bad angle '" + tok + "'");
  }
  return v;
}

}  // namespace detail

// Minimal reader for programs produced by emit_qasm. Counts gates and
// collects the literal rotation angles; not a general OpenQASM parser.
inline QasmCircuit parse_qasm(const std::string &text) {
  QasmCircuit c;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) {
      continue;
    }
    const std::string stmt = line.substr(start);
    if (stmt.rfind("//", 0) == 0) {
      continue;
    }
    if (stmt.rfind("x ", 0) == 0) {
      ++c.x_gates;
    } else if (stmt.rfind("rx(", 0) == 0) {
      c.rx_angles.push_back(detail::qasm_parse_angle(stmt, 2));
    } else if (stmt.rfind("rz(", 0) == 0) {
      c.rz_angles.push_back(detail::qasm_parse_angle(stmt, 2));
    } else if (stmt.find("measure") != std::string::npos) {
      ++c.measurements;
    }
  }
  return c;
}

}  // namespace topodd
