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

// Command-line front end. Subcommands:
//
//   phases       print a sequence's phase list (fractions of pi and radians)
//   verify       run the structural checks and the numerical identity verdict
//   scan         evaluate the protocol over an error grid, write CSV or JSON
//   export-qasm  emit the hardware protocol as an OpenQASM 3 program
//
// Exit codes: 0 on success, 2 on a usage error, 3 when `verify` finds that
// the sequence does not cancel pulse-area errors at all orders.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "topodd/topodd.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

topodd::PhaseList make_sequence(const std::string &family_name, int n) {
  const std::optional<topodd::Family> family =
      topodd::family_from_string(family_name);
  if (!family.has_value()) {
    throw CLI::ValidationError("--family",
                               "unknown sequence family '" + family_name +
                                   "' (expected tn, cpmg, xy4, xy8, kdd, ur)");
  }
  try {
    return topodd::reference_phases(*family, n);
  } catch (const std::invalid_argument &e) {
    throw CLI::ValidationError("--n", e.what());
  }
}

std::string fraction_line(const topodd::PhaseList &p) {
  std::string line;
  for (int k = 0; k < p.size(); ++k) {
    if (k != 0) {
      line += ", ";
    }
    line += p.phases[k].fraction_str();
  }
  line += " (×π)";
  return line;
}

std::string radians_line(const topodd::PhaseList &p) {
  std::string line;
  for (int k = 0; k < p.size(); ++k) {
    if (k != 0) {
      line += ", ";
    }
    line += fmt17(p.phases[k].radians());
  }
  line += " (rad)";
  return line;
}

int cmd_phases(const std::string &family, int n) {
  const topodd::PhaseList p = make_sequence(family, n);
  std::cout << fraction_line(p) << "\n" << radians_line(p) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string &family, int n, bool as_json) {
  const topodd::PhaseList p = make_sequence(family, n);
  const topodd::ConditionReport r = topodd::condition_report(p);
  if (as_json) {
    std::cout << "{\n"
              << "  \"sequence\": \"" << p.name << "\",\n"
              << "  \"sum_condition\": "
              << (r.sum.satisfied ? "true" : "false") << ",\n"
              << "  \"sum_residual\": " << fmt17(r.sum.residual) << ",\n"
              << "  \"pi_pairing\": " << (r.pi_pairing ? "true" : "false")
              << ",\n"
              << "  \"palindrome_pi_shift\": "
              << (r.palindrome_pi_shift ? "true" : "false") << ",\n"
              << "  \"commuting_neighbors\": "
              << (r.commuting_neighbors ? "true" : "false") << ",\n"
              << "  \"all_order_cancellation\": "
              << (r.all_orders.identity ? "true" : "false") << ",\n"
              << "  \"max_epsilon\": " << fmt17(r.all_orders.max_error)
              << ",\n"
              << "  \"max_epsilon_phase_insensitive\": "
              << fmt17(r.phase_insensitive_residual) << "\n"
              << "}\n";
  } else {
    std::cout << "sequence:                " << p.name << "\n"
              << "sum condition:           "
              << (r.sum.satisfied ? "satisfied" : "violated")
              << " (residual " << fmt17(r.sum.residual) << ")\n"
              << "pi pairing:              "
              << (r.pi_pairing ? "true" : "false") << "\n"
              << "palindrome + pi shift:   "
              << (r.palindrome_pi_shift ? "true" : "false") << "\n"
              << "commuting neighbors:     "
              << (r.commuting_neighbors ? "true" : "false") << "\n"
              << "all-order cancellation:  "
              << (r.all_orders.identity ? "true" : "false") << " (max eps "
              << fmt17(r.all_orders.max_error) << ", phase-insensitive "
              << fmt17(r.phase_insensitive_residual) << ")\n";
  }
  return r.all_orders.identity ? kExitOk : kExitVerifyFailed;
}

struct ScanOptions {
  std::string family = "tn";
  int n = 10;
  double omega_mhz = 25.0;   // Rabi frequency Omega / 2 pi, in MHz
  double duration_ns = 20.0; // pulse duration, in ns
  double delay_ns = 0.0;     // inter-pulse delay, in ns
  std::string axis = "2d";
  std::vector<double> xi_range{-1.0, 1.0};
  std::vector<double> delta_range{-1.0, 1.0};
  int points = 201;
  int xi_points = 41;
  int delta_points = 41;
  std::string state = "1";
  std::string convention = "ideal";
  std::string format = "csv";
  std::string output = "-";
  int workers = 1;
  int shots = 0;  // 0 means exact populations
  std::uint64_t seed = 12345;
};

int cmd_scan(const ScanOptions &opt) {
  topodd::Protocol proto;
  proto.seq.phases = make_sequence(opt.family, opt.n);
  if (!(opt.omega_mhz > 0.0)) {
    throw CLI::ValidationError("--omega", "must be positive");
  }
  if (!(opt.duration_ns > 0.0)) {
    throw CLI::ValidationError("--duration", "must be positive");
  }
  if (opt.delay_ns < 0.0) {
    throw CLI::ValidationError("--delay", "must be non-negative");
  }
  proto.seq.base.rabi = 2.0 * std::numbers::pi * opt.omega_mhz * 1e6;
  proto.seq.base.duration = opt.duration_ns * 1e-9;
  proto.seq.delay = opt.delay_ns * 1e-9;
  const std::optional<topodd::PauliState> state =
      topodd::pauli_state_from_string(opt.state);
  if (!state.has_value()) {
    throw CLI::ValidationError(
        "--state", "unknown state '" + opt.state +
                       "' (expected 0, 1, +, -, +i, or -i)");
  }
  proto.prep = *state;
  if (opt.convention == "ideal") {
    proto.ideal_outcome = true;
  } else if (opt.convention == "literal") {
    proto.ideal_outcome = false;
  } else {
    throw CLI::ValidationError("--convention",
                               "expected 'ideal' or 'literal'");
  }
  if (opt.xi_range.size() != 2 || !(opt.xi_range[0] <= opt.xi_range[1])) {
    throw CLI::ValidationError("--xi-range", "expected LO HI with LO <= HI");
  }
  if (opt.delta_range.size() != 2 ||
      !(opt.delta_range[0] <= opt.delta_range[1])) {
    throw CLI::ValidationError("--delta-range",
                               "expected LO HI with LO <= HI");
  }
  if (opt.points < 2 || opt.xi_points < 2 || opt.delta_points < 2) {
    throw CLI::ValidationError("--points", "need at least 2 points per axis");
  }
  if (opt.workers < 1) {
    throw CLI::ValidationError("--workers", "must be >= 1");
  }

  topodd::ScanResult scan;
  if (opt.axis == "2d") {
    scan = topodd::scan_2d(proto, opt.xi_range[0], opt.xi_range[1],
                           opt.xi_points, opt.delta_range[0],
                           opt.delta_range[1], opt.delta_points, opt.workers);
  } else if (opt.axis == "xi") {
    scan = topodd::scan_1d(proto, topodd::ScanAxis::kArea, opt.xi_range[0],
                           opt.xi_range[1], opt.points, opt.workers);
  } else if (opt.axis == "delta") {
    scan = topodd::scan_1d(proto, topodd::ScanAxis::kDetuning,
                           opt.delta_range[0], opt.delta_range[1], opt.points,
                           opt.workers);
  } else {
    throw CLI::ValidationError("--axis", "expected 'xi', 'delta', or '2d'");
  }
  if (opt.shots > 0) {
    topodd::sample_shots(scan, opt.shots, opt.seed);
    scan.model += ";shots=" + std::to_string(opt.shots) +
                  ";seed=" + std::to_string(opt.seed);
  }

  std::ostream *os = &std::cout;
  std::ofstream file;
  if (opt.output != "-") {
    file.open(opt.output, std::ios::binary);
    if (!file) {
      throw CLI::ValidationError("--output",
                                 "cannot open '" + opt.output +
                                     "' for writing");
    }
    os = &file;
  }
  if (opt.format == "csv") {
    topodd::write_scan_csv(*os, scan);
  } else if (opt.format == "json") {
    topodd::write_scan_json(*os, scan);
  } else {
    throw CLI::ValidationError("--format", "expected 'csv' or 'json'");
  }
  os->flush();
  if (!*os) {
    throw CLI::ValidationError("--output", "write failed");
  }
  return kExitOk;
}

int cmd_export_qasm(const std::string &family, int n, double xi, int reps,
                    int shots, const std::string &output) {
  const topodd::PhaseList p = make_sequence(family, n);
  if (reps < 1) {
    throw CLI::ValidationError("--reps", "must be >= 1");
  }
  if (shots < 1) {
    throw CLI::ValidationError("--shots", "must be >= 1");
  }
  const std::string text = topodd::emit_qasm(p, xi, reps, shots);
  if (output == "-") {
    std::cout << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      throw CLI::ValidationError("--output",
                                 "cannot open '" + output + "' for writing");
    }
    file << text;
    if (!file) {
      throw CLI::ValidationError("--output", "write failed");
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Topological dynamical-decoupling sequence toolkit"};
  app.require_subcommand(1);

  std::string family = "tn";
  int n = 10;

  CLI::App *phases = app.add_subcommand(
      "phases", "Print a sequence's pulse phases");
  phases->add_option("--family", family, "Sequence family")->capture_default_str();
  phases->add_option("--n", n, "Number of pulses")->capture_default_str();

  bool verify_json = false;
  CLI::App *verify = app.add_subcommand(
      "verify", "Check cancellation conditions for a sequence");
  verify->add_option("--family", family, "Sequence family")->capture_default_str();
  verify->add_option("--n", n, "Number of pulses")->capture_default_str();
  verify->add_flag("--json", verify_json, "Emit the report as JSON");

  ScanOptions scan_opt;
  CLI::App *scan = app.add_subcommand(
      "scan", "Evaluate the protocol over a pulse-error grid");
  scan->add_option("--family", scan_opt.family, "Sequence family")
      ->capture_default_str();
  scan->add_option("--n", scan_opt.n, "Number of pulses")
      ->capture_default_str();
  scan->add_option("--omega", scan_opt.omega_mhz,
                   "Rabi frequency Omega/2pi in MHz")
      ->capture_default_str();
  scan->add_option("--duration", scan_opt.duration_ns,
                   "Pulse duration in ns")
      ->capture_default_str();
  scan->add_option("--delay", scan_opt.delay_ns,
                   "Symmetric inter-pulse delay in ns")
      ->capture_default_str();
  scan->add_option("--axis", scan_opt.axis, "Scan axis: xi, delta, or 2d")
      ->capture_default_str();
  scan->add_option("--xi-range", scan_opt.xi_range,
                   "Pulse-area error range LO HI")
      ->expected(2);
  scan->add_option("--delta-range", scan_opt.delta_range,
                   "Relative detuning range LO HI")
      ->expected(2);
  scan->add_option("--points", scan_opt.points, "Points for a 1D scan")
      ->capture_default_str();
  scan->add_option("--xi-points", scan_opt.xi_points,
                   "Pulse-area points for a 2D scan")
      ->capture_default_str();
  scan->add_option("--delta-points", scan_opt.delta_points,
                   "Detuning points for a 2D scan")
      ->capture_default_str();
  scan->add_option("--state", scan_opt.state,
                   "Prepared state: 0, 1, +, -, +i, -i")
      ->capture_default_str();
  scan->add_option("--convention", scan_opt.convention,
                   "Success convention: ideal or literal")
      ->capture_default_str();
  scan->add_option("--format", scan_opt.format, "Output format: csv or json")
      ->capture_default_str();
  scan->add_option("--output", scan_opt.output, "Output path ('-' = stdout)")
      ->capture_default_str();
  scan->add_option("--workers", scan_opt.workers, "Worker thread cap")
      ->capture_default_str();
  scan->add_option("--shots", scan_opt.shots,
                   "Overlay binomial shot noise with this many draws "
                   "(0 = exact)")
      ->capture_default_str();
  scan->add_option("--seed", scan_opt.seed, "Shot-noise seed")
      ->capture_default_str();

  double qasm_xi = 0.0;
  int qasm_reps = 1;
  int qasm_shots = 512;
  std::string qasm_output = "-";
  CLI::App *qasm = app.add_subcommand(
      "export-qasm", "Emit the protocol as an OpenQASM 3 program");
  qasm->add_option("--family", family, "Sequence family")->capture_default_str();
  qasm->add_option("--n", n, "Number of pulses")->capture_default_str();
  qasm->add_option("--xi", qasm_xi, "Pulse-area error")->capture_default_str();
  qasm->add_option("--reps", qasm_reps, "Decoupling-block repetitions")
      ->capture_default_str();
  qasm->add_option("--shots", qasm_shots, "Shot count recorded in the header")
      ->capture_default_str();
  qasm->add_option("--output", qasm_output, "Output path ('-' = stdout)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (phases->parsed()) {
      return cmd_phases(family, n);
    }
    if (verify->parsed()) {
      return cmd_verify(family, n, verify_json);
    }
    if (scan->parsed()) {
      return cmd_scan(scan_opt);
    }
    if (qasm->parsed()) {
      return cmd_export_qasm(family, n, qasm_xi, qasm_reps, qasm_shots,
                             qasm_output);
    }
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
