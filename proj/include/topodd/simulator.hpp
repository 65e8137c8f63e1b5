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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "topodd/phase.hpp"
#include "topodd/pulse_models.hpp"
#include "topodd/sequences.hpp"
#include "topodd/su2.hpp"

namespace topodd {

// The six Pauli eigenstates used as protocol start states.
enum class PauliState { kZero, kOne, kPlus, kMinus, kPlusI, kMinusI };

inline const char *pauli_state_label(PauliState s) {
  switch (s) {
    case PauliState::kZero:
      return "0";
    case PauliState::kOne:
      return "1";
    case PauliState::kPlus:
      return "+";
    case PauliState::kMinus:
      return "-";
    case PauliState::kPlusI:
      return "+i";
    case PauliState::kMinusI:
      return "-i";
  }
  return "?";
}

inline std::optional<PauliState> pauli_state_from_string(const std::string &s) {
  if (s == "0") return PauliState::kZero;
  if (s == "1") return PauliState::kOne;
  if (s == "+") return PauliState::kPlus;
  if (s == "-") return PauliState::kMinus;
  if (s == "+i") return PauliState::kPlusI;
  if (s == "-i") return PauliState::kMinusI;
  return std::nullopt;
}

// Ideal preparation unitary taking |0> to the requested eigenstate, built
// from resonant quarter- and half-turn pulses. A half-pi pulse at axis
// phase phi maps |0> to (|0> - i e^{-i phi} |1>) / sqrt(2), which fixes the
// axis phase per target state.
inline Unitary2 preparation(PauliState s) {
  const double half_pi = 0.5 * std::numbers::pi;
  switch (s) {
    case PauliState::kZero:
      return identity();
    case PauliState::kOne:
      return resonant_pulse(std::numbers::pi, Phase::zero());
    case PauliState::kPlus:
      return resonant_pulse(half_pi, Phase(3, 2));
    case PauliState::kMinus:
      return resonant_pulse(half_pi, Phase(1, 2));
    case PauliState::kPlusI:
      return resonant_pulse(half_pi, Phase::pi());
    case PauliState::kMinusI:
      return resonant_pulse(half_pi, Phase::zero());
  }
  return identity();
}

// A decoupling block: the phase list plus the physical pulse it is played
// with. When `shaped` is set the pulses are integrated from that profile
// (amplitude scaled by 1 + xi, constant detuning added); otherwise the
// rectangular model is evaluated in closed form. Delays are free evolutions
// at the scan detuning; with the symmetric flag a half delay is placed
// before the first and after the last pulse, giving n + 1 delay slots.
struct SequenceSpec {
  PhaseList phases;
  RectPulse base;  // nominal pulse; rabi * duration should be pi
  double delay = 0.0;
  bool symmetric_delays = true;
  std::optional<ShapedPulse> shaped;
  double integrate_tol = 1e-10;
};

// Measurement bookkeeping for a prepare / decouple / unprepare run. With
// `ideal_outcome` set (the default), run_protocol reports the probability of
// obtaining the outcome an error-free circuit would produce; for sequences
// that compose to the identity this equals |<0| U_unprep U_DD U_prep |0>|^2.
// The distinction only matters for blocks whose ideal action is itself a
// flip (e.g. a lone pi pulse), where the literal |0> population would read
// zero for a perfect pulse.
struct Protocol {
  PauliState prep = PauliState::kOne;
  SequenceSpec seq;
  bool ideal_outcome = true;
};

namespace detail {

using Vec2 = std::array<Complex, 2>;

inline Vec2 apply(const Unitary2 &u, const Vec2 &v) {
  return {u.a * v[0] + u.b * v[1],
          -std::conj(u.b) * v[0] + std::conj(u.a) * v[1]};
}

inline ShapedPulse scaled_shaped(const ShapedPulse &tpl, double xi,
                                 double detuning_offset, const Phase &phase) {
  ShapedPulse p = tpl;
  for (double &w : p.rabi) {
    w *= 1.0 + xi;
  }
  for (double &d : p.detuning) {
    d += detuning_offset;
  }
  p.phase = phase;
  return p;
}

}  // namespace detail

// Propagator of the decoupling block alone at pulse-area error xi and
// relative detuning delta_over_omega (both dimensionless; the detuning is
// delta_over_omega * base.rabi, applied to pulses and delays alike).
inline Unitary2 dd_propagator(const SequenceSpec &seq, double xi,
                              double delta_over_omega) {
  const double detuning = delta_over_omega * seq.base.rabi;
  const double tau = seq.delay;
  Unitary2 u = identity();
  auto add_delay = [&](double t) {
    if (t > 0.0) {
      u = compose(free_propagator(detuning, t), u);
    }
  };
  const int n = seq.phases.size();
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      add_delay(seq.symmetric_delays ? 0.5 * tau : 0.0);
    } else {
      add_delay(tau);
    }
    if (seq.shaped.has_value()) {
      const ShapedPulse pulse = detail::scaled_shaped(
          *seq.shaped, xi, detuning, seq.phases.phases[k]);
      u = compose(integrate_propagator(pulse, seq.integrate_tol), u);
    } else {
      RectPulse pulse = seq.base;
      pulse.rabi = seq.base.rabi * (1.0 + xi);
      pulse.detuning = detuning;
      pulse.phase = seq.phases.phases[k];
      u = compose(rect_propagator(pulse), u);
    }
  }
  add_delay(seq.symmetric_delays ? 0.5 * tau : 0.0);
  return u;
}

// Full protocol: ideal preparation, faulty decoupling block, ideal
// unpreparation (the dagger of the preparation), projective measurement.
inline double run_protocol(const Protocol &proto, double xi,
                           double delta_over_omega) {
  const Unitary2 prep = preparation(proto.prep);
  const Unitary2 unprep = dagger(prep);
  const Unitary2 dd = dd_propagator(proto.seq, xi, delta_over_omega);
  const Unitary2 total = compose(unprep, compose(dd, prep));
  const detail::Vec2 start{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  const detail::Vec2 final = detail::apply(total, start);
  if (!proto.ideal_outcome) {
    return std::norm(final[0]);
  }
  const Unitary2 dd_ideal = dd_propagator(proto.seq, 0.0, 0.0);
  const Unitary2 total_ideal = compose(unprep, compose(dd_ideal, prep));
  const detail::Vec2 target = detail::apply(total_ideal, start);
  const Complex overlap =
      std::conj(target[0]) * final[0] + std::conj(target[1]) * final[1];
  return std::norm(overlap);
}

enum class ScanAxis { kArea, kDetuning };

// Grid of protocol populations and decoupling-block rephasing errors.
// Row-major over (xi index, delta index); a 1D scan holds a single value on
// the frozen axis. All metadata fields round-trip through the CSV format.
struct ScanResult {
  std::string sequence;
  std::string model;
  std::string prep;
  std::string convention;
  std::string generated;  // ISO 8601, informational only
  std::vector<double> xi_values;
  std::vector<double> delta_values;
  std::vector<double> p0;       // size xi_values.size() * delta_values.size()
  std::vector<double> epsilon;  // sign-minimized rephasing error of the block

  std::size_t index(std::size_t i, std::size_t j) const {
    return i * delta_values.size() + j;
  }
  double p0_at(std::size_t i, std::size_t j) const { return p0[index(i, j)]; }
  double epsilon_at(std::size_t i, std::size_t j) const {
    return epsilon[index(i, j)];
  }
};

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1 || (points > 1 && !(lo < hi))) {
    throw std::invalid_argument("linspace: need lo < hi and points >= 1");
  }
  std::vector<double> v(points);
  if (points == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < points; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(points - 1);
  }
  return v;
}

// Space-free so it survives as a single token in the CSV header row.
inline std::string format_model(const SequenceSpec &seq) {
  char buf[256];
  if (seq.shaped.has_value()) {
    const char *kind =
        seq.shaped->model == ShapedPulse::Model::kAllenEberly ? "ae"
        : seq.shaped->model == ShapedPulse::Model::kLandauZener ? "lz"
                                                                : "custom";
    std::snprintf(buf, sizeof buf, "%s(samples=%zu)", kind, seq.shaped->size());
  } else {
    std::snprintf(buf, sizeof buf,
                  "rect(omega=%.17g;duration=%.17g;delay=%.17g;%s)",
                  seq.base.rabi, seq.base.duration, seq.delay,
                  seq.symmetric_delays ? "symmetric" : "internal");
  }
  return buf;
}

inline std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace detail

// Evaluates the protocol over the full (xi, delta) grid. Each grid point is
// computed independently and written to its own slot, so the result is
// bit-identical for any worker count; `workers` only caps the number of
// threads used.
inline ScanResult scan_2d(const Protocol &proto, double xi_lo, double xi_hi,
                          int xi_points, double delta_lo, double delta_hi,
                          int delta_points, int workers = 1) {
  if (workers < 1) {
    throw std::invalid_argument("scan_2d: workers must be >= 1");
  }
  ScanResult r;
  r.sequence = proto.seq.phases.name;
  r.model = detail::format_model(proto.seq);
  r.prep = pauli_state_label(proto.prep);
  r.convention = proto.ideal_outcome ? "ideal" : "literal";
  r.generated = detail::timestamp_utc();
  r.xi_values = detail::linspace(xi_lo, xi_hi, xi_points);
  r.delta_values = detail::linspace(delta_lo, delta_hi, delta_points);
  const std::size_t total = r.xi_values.size() * r.delta_values.size();
  r.p0.resize(total);
  r.epsilon.resize(total);

  auto eval_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t i = idx / r.delta_values.size();
      const std::size_t j = idx % r.delta_values.size();
      const double xi = r.xi_values[i];
      const double delta = r.delta_values[j];
      r.p0[idx] = run_protocol(proto, xi, delta);
      r.epsilon[idx] =
          rephasing_error_sign_min(dd_propagator(proto.seq, xi, delta));
    }
  };

  const std::size_t nthreads =
      std::min<std::size_t>(static_cast<std::size_t>(workers), total);
  if (nthreads <= 1) {
    eval_range(0, total);
    return r;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const std::size_t chunk = (total + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    if (begin < end) {
      pool.emplace_back(eval_range, begin, end);
    }
  }
  for (std::thread &th : pool) {
    th.join();
  }
  return r;
}

// One-axis scan: the other coordinate is pinned to zero.
inline ScanResult scan_1d(const Protocol &proto, ScanAxis axis, double lo,
                          double hi, int points, int workers = 1) {
  if (axis == ScanAxis::kArea) {
    return scan_2d(proto, lo, hi, points, 0.0, 0.0, 1, workers);
  }
  return scan_2d(proto, 0.0, 0.0, 1, lo, hi, points, workers);
}

// The same 1D scan run from each of the six Pauli eigenstates.
inline std::array<ScanResult, 6> six_state_scan(const SequenceSpec &seq,
                                                ScanAxis axis, double lo,
                                                double hi, int points,
                                                int workers = 1) {
  const PauliState states[6] = {PauliState::kZero,  PauliState::kOne,
                                PauliState::kPlus,  PauliState::kMinus,
                                PauliState::kPlusI, PauliState::kMinusI};
  std::array<ScanResult, 6> out;
  for (int s = 0; s < 6; ++s) {
    Protocol proto;
    proto.prep = states[s];
    proto.seq = seq;
    out[s] = scan_1d(proto, axis, lo, hi, points, workers);
  }
  return out;
}

// Width of the contiguous interval around zero on which p0 >= 1 - threshold,
// with linear interpolation at the crossings. Requires a 1D scan. Returns 0
// when even the grid point nearest zero is below the threshold, and the full
// axis extent when the curve never drops below it.
inline double robust_width(const ScanResult &scan, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("robust_width: threshold must be in (0, 1)");
  }
  const bool xi_axis = scan.delta_values.size() == 1;
  const bool delta_axis = scan.xi_values.size() == 1;
  if (xi_axis == delta_axis) {
    throw std::invalid_argument("robust_width: need a 1D scan");
  }
  const std::vector<double> &x = xi_axis ? scan.xi_values : scan.delta_values;
  std::vector<double> p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i] = xi_axis ? scan.p0_at(i, 0) : scan.p0_at(0, i);
  }
  const double level = 1.0 - threshold;
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) < std::abs(x[i0])) {
      i0 = i;
    }
  }
  if (p[i0] < level) {
    return 0.0;
  }
  auto cross = [&](std::size_t in, std::size_t out) {
    // Linear interpolation of the crossing point between a grid point above
    // the level and its neighbor below it.
    const double t = (p[in] - level) / (p[in] - p[out]);
    return x[in] + t * (x[out] - x[in]);
  };
  double right = x.back();
  for (std::size_t i = i0; i + 1 < x.size(); ++i) {
    if (p[i + 1] < level) {
      right = cross(i, i + 1);
      break;
    }
  }
  double left = x.front();
  for (std::size_t i = i0; i > 0; --i) {
    if (p[i - 1] < level) {
      left = cross(i, i - 1);
      break;
    }
  }
  return right - left;
}

// Overlays binomial shot noise on the populations: each p0 entry is replaced
// by a draw from Binomial(shots, p0) / shots. Seeded per grid point, so the
// result does not depend on evaluation order. For visual comparison with
// sampled data; the exact populations are what the library computes.
inline void sample_shots(ScanResult &scan, int shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("sample_shots: shots must be >= 1");
  }
  for (std::size_t idx = 0; idx < scan.p0.size(); ++idx) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + idx);
    const double p = std::min(1.0, std::max(0.0, scan.p0[idx]));
    std::binomial_distribution<int> dist(shots, p);
    scan.p0[idx] = static_cast<double>(dist(rng)) / static_cast<double>(shots);
  }
}

}  // namespace topodd
