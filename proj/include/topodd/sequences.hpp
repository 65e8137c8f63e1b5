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
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "topodd/phase.hpp"
#include "topodd/pulse_models.hpp"
#include "topodd/su2.hpp"

namespace topodd {

// A named list of pulse phases. Index k (1-based in the formulas below,
// 0-based in the vector) is the phase of the k-th pi pulse in time order.
struct PhaseList {
  std::string name;
  std::vector<Phase> phases;

  int size() const { return static_cast<int>(phases.size()); }
};

// ---- sequence constructions ------------------------------------------------

// Tn phase list for even n >= 2:
//
//     phi_k = (k - 1) (n/2 - k) / (n/2) * pi,   k = 1..n,
//
// reduced mod 2*pi. The first n/2 phases form a palindrome and the second
// half repeats the first shifted by pi; see check_palindrome_pi_shift for
// why that structure forces the composed propagator to the identity at
// every pulse area.
inline PhaseList tn_phases(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("tn_phases: n must be even and >= 2");
  }
  const std::int64_t half = n / 2;
  PhaseList out;
  out.name = "T" + std::to_string(n);
  out.phases.reserve(n);
  for (std::int64_t k = 1; k <= n; ++k) {
    out.phases.emplace_back((k - 1) * (half - k), half);
  }
  return out;
}

// Reference sequences the Tn family is compared against.
enum class Family { kTn, kCpmg, kXy4, kXy8, kKdd, kUr };

inline PhaseList cpmg_phases(int n) {
  if (n < 1) {
    throw std::invalid_argument("cpmg_phases: n must be >= 1");
  }
  PhaseList out;
  out.name = "CPMG" + std::to_string(n);
  out.phases.assign(n, Phase::zero());
  return out;
}

namespace detail {

// Repeats `block` until `n` pulses are reached; n must be a multiple of the
// block length.
inline PhaseList repeat_block(const std::string &base_name,
                              const std::vector<Phase> &block, int n) {
  const int len = static_cast<int>(block.size());
  if (n < len || n % len != 0) {
    throw std::invalid_argument(base_name + ": n must be a positive multiple of " +
                                std::to_string(len));
  }
  PhaseList out;
  const int reps = n / len;
  out.name = reps == 1 ? base_name : base_name + "x" + std::to_string(reps);
  out.phases.reserve(n);
  for (int r = 0; r < reps; ++r) {
    out.phases.insert(out.phases.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace detail

// XY4: pulses along x, y, x, y.
inline PhaseList xy4_phases(int n = 4) {
  return detail::repeat_block(
      "XY4", {Phase::zero(), Phase(1, 2), Phase::zero(), Phase(1, 2)}, n);
}

// XY8: XY4 followed by its mirror image.
inline PhaseList xy8_phases(int n = 8) {
  return detail::repeat_block("XY8",
                              {Phase::zero(), Phase(1, 2), Phase::zero(),
                               Phase(1, 2), Phase(1, 2), Phase::zero(),
                               Phase(1, 2), Phase::zero()},
                              n);
}

// KDD: each XY4 pulse replaced by the five-pulse Knill composite
// (pi/6, 0, pi/2, 0, pi/6) offset by the frame phase, 20 pulses per cycle.
inline PhaseList kdd_phases(int n = 20) {
  const Phase knill[5] = {Phase(1, 6), Phase::zero(), Phase(1, 2),
                          Phase::zero(), Phase(1, 6)};
  std::vector<Phase> block;
  block.reserve(20);
  const Phase frames[4] = {Phase::zero(), Phase(1, 2), Phase::zero(),
                           Phase(1, 2)};
  for (const Phase &f : frames) {
    for (const Phase &k : knill) {
      block.push_back(k + f);
    }
  }
  return detail::repeat_block("KDD", block, n);
}

// URn for n a multiple of 4, built from the universally robust family's
// quadratic phase rule phi_k = (k-1)(k-2)/2 * step + (k-1) * phi_2 with
// step = 4*pi/n. The free second phase is fixed to phi_2 = -(n-4)/n * pi,
// the choice for which the list acquires the palindrome-plus-pi-shift
// structure and therefore cancels pulse-area errors at every order (the
// rule then collapses to phi_k = (k-1)(2k-n)/n * pi).
inline PhaseList ur_phases(int n) {
  if (n < 4 || n % 4 != 0) {
    throw std::invalid_argument("ur_phases: n must be a positive multiple of 4");
  }
  PhaseList out;
  out.name = "UR" + std::to_string(n);
  out.phases.reserve(n);
  for (std::int64_t k = 1; k <= n; ++k) {
    out.phases.emplace_back((k - 1) * (2 * k - n), n);
  }
  return out;
}

inline PhaseList reference_phases(Family family, int n) {
  switch (family) {
    case Family::kTn:
      return tn_phases(n);
    case Family::kCpmg:
      return cpmg_phases(n);
    case Family::kXy4:
      return xy4_phases(n);
    case Family::kXy8:
      return xy8_phases(n);
    case Family::kKdd:
      return kdd_phases(n);
    case Family::kUr:
      return ur_phases(n);
  }
  throw std::invalid_argument("reference_phases: unknown family");
}

inline std::optional<Family> family_from_string(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (name == "tn" || name == "t") return Family::kTn;
  if (name == "cpmg") return Family::kCpmg;
  if (name == "xy4") return Family::kXy4;
  if (name == "xy8") return Family::kXy8;
  if (name == "kdd") return Family::kKdd;
  if (name == "ur") return Family::kUr;
  return std::nullopt;
}

// ---- structural conditions -------------------------------------------------

struct SumCondition {
  bool satisfied = false;
  double residual = 0.0;  // |sum_k e^{i phi_k}| after symbolic cancellation
};

// First-order condition sum_k e^{i phi_k} = 0. Pairs of phases differing by
// exactly pi cancel symbolically before anything is evaluated in floating
// point, so a list that is fully pi-paired reports residual 0.0 exactly.
inline SumCondition check_sum_condition(const PhaseList &p) {
  std::map<std::pair<std::int64_t, std::int64_t>, int> counts;
  for (const Phase &ph : p.phases) {
    counts[{ph.numerator(), ph.denominator()}]++;
  }
  Complex rest(0.0, 0.0);
  for (auto &[key, count] : counts) {
    if (count == 0) {
      continue;
    }
    const Phase ph(key.first, key.second);
    const Phase partner = ph.plus_pi();
    auto it = counts.find({partner.numerator(), partner.denominator()});
    if (it != counts.end() && it->second > 0) {
      const int cancelled = std::min(count, it->second);
      count -= cancelled;
      it->second -= cancelled;
    }
    if (count > 0) {
      rest += static_cast<double>(count) * exp_i(ph.radians());
    }
  }
  SumCondition out;
  out.residual = std::abs(rest);
  out.satisfied = out.residual < 1e-12;
  return out;
}

// True when the multiset of phases splits into pairs differing by exactly
// pi, i.e. each phase value occurs as often as its pi-shifted partner.
inline bool check_pi_pairing(const PhaseList &p) {
  if (p.size() % 2 != 0) {
    return false;
  }
  std::map<std::pair<std::int64_t, std::int64_t>, int> counts;
  for (const Phase &ph : p.phases) {
    counts[{ph.numerator(), ph.denominator()}]++;
  }
  for (const auto &[key, count] : counts) {
    const Phase partner = Phase(key.first, key.second).plus_pi();
    auto it = counts.find({partner.numerator(), partner.denominator()});
    const int partner_count = it == counts.end() ? 0 : it->second;
    if (count != partner_count) {
      return false;
    }
  }
  return true;
}

// True when the first half of the list is a palindrome and the second half
// repeats the first shifted by pi. With U(A, phi + pi) = U(A, phi)^dagger
// for any resonant area A (a is real), the second-half product is then the
// exact inverse of the first-half product:
//
//   U^(n) = [U_h' ... U_1'] [U_h ... U_1]      with U_k' = U_k^dagger
//         = [U_1 ... U_h]^dagger [U_h ... U_1]  (palindrome reverses freely)
//         = I                                    at every pulse area.
inline bool check_palindrome_pi_shift(const PhaseList &p) {
  const int n = p.size();
  if (n < 2 || n % 2 != 0) {
    return false;
  }
  const int half = n / 2;
  for (int k = 0; k < half; ++k) {
    if (!(p.phases[k] == p.phases[half - 1 - k])) {
      return false;
    }
    if (!(p.phases[half + k] == p.phases[k].plus_pi())) {
      return false;
    }
  }
  return true;
}

// Literal neighbor condition: every adjacent pair of phases differs by a
// multiple of pi, so the generator matrices of neighboring pulses commute.
// Satisfied by the two- and four-pulse lists but not by the longer Tn lists,
// whose identity property rests on the palindrome structure above instead.
inline bool check_commuting_neighbors(const PhaseList &p) {
  for (int k = 0; k + 1 < p.size(); ++k) {
    if (!(p.phases[k + 1] - p.phases[k]).is_multiple_of_pi()) {
      return false;
    }
  }
  return true;
}

// ---- numerical verification ------------------------------------------------

// Composes the resonant-pulse propagators of the list at a common area.
inline Unitary2 sequence_propagator_resonant(const PhaseList &p, double area) {
  Unitary2 u = identity();
  for (const Phase &ph : p.phases) {
    u = compose(resonant_pulse(area, ph), u);
  }
  return u;
}

// Composes detuned rectangular pulses: each pulse runs at Rabi rate
// base.rabi * (1 + xi) for base.duration with detuning delta_over_omega *
// base.rabi. No inter-pulse delays.
inline Unitary2 sequence_propagator_rect(const PhaseList &p,
                                         const RectPulse &base, double xi,
                                         double delta_over_omega) {
  Unitary2 u = identity();
  RectPulse pulse = base;
  pulse.rabi = base.rabi * (1.0 + xi);
  pulse.detuning = delta_over_omega * base.rabi;
  for (const Phase &ph : p.phases) {
    pulse.phase = ph;
    u = compose(rect_propagator(pulse), u);
  }
  return u;
}

struct IdentityCheck {
  bool identity = false;
  double max_error = 0.0;  // max over the sampled areas of the sign-minimized
                           // rephasing error
};

// Samples the pulse-area error xi on a uniform grid over [-1, 1] (areas 0 to
// 2*pi) and composes the sequence at each sample. The list cancels area
// errors at all orders iff the worst-case sign-minimized rephasing error
// stays below 1e-10.
inline IdentityCheck verify_identity_all_orders(const PhaseList &p,
                                                int samples = 201) {
  if (samples < 1) {
    throw std::invalid_argument("verify_identity_all_orders: samples must be >= 1");
  }
  IdentityCheck out;
  for (int i = 0; i < samples; ++i) {
    const double xi =
        samples == 1 ? 0.0
                     : -1.0 + 2.0 * static_cast<double>(i) /
                                  static_cast<double>(samples - 1);
    const double area = std::numbers::pi * (1.0 + xi);
    const Unitary2 u = sequence_propagator_resonant(p, area);
    out.max_error = std::max(out.max_error, rephasing_error_sign_min(u));
  }
  out.identity = out.max_error < 1e-10;
  return out;
}

// Aggregate report of every structural check plus the numerical verdict.
struct ConditionReport {
  SumCondition sum;
  bool pi_pairing = false;
  bool palindrome_pi_shift = false;
  bool commuting_neighbors = false;
  IdentityCheck all_orders;
  double phase_insensitive_residual = 0.0;  // eps' of the composed propagator
                                            // at the worst sampled area
};

inline ConditionReport condition_report(const PhaseList &p, int samples = 201) {
  ConditionReport r;
  r.sum = check_sum_condition(p);
  r.pi_pairing = check_pi_pairing(p);
  r.palindrome_pi_shift = check_palindrome_pi_shift(p);
  r.commuting_neighbors = check_commuting_neighbors(p);
  r.all_orders = verify_identity_all_orders(p, samples);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double xi =
        samples == 1 ? 0.0
                     : -1.0 + 2.0 * static_cast<double>(i) /
                                  static_cast<double>(samples - 1);
    const Unitary2 u =
        sequence_propagator_resonant(p, std::numbers::pi * (1.0 + xi));
    worst = std::max(worst, std::min(rephasing_error_phase_insensitive(u),
                                     rephasing_error_phase_insensitive(negate(u))));
  }
  r.phase_insensitive_residual = worst;
  return r;
}

// ---- detuning robustness order ----------------------------------------------

namespace detail {

inline double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

// k-th central finite difference of f at 0 with step h. Uses the binomial
// stencil on the symmetric points (k/2 - j) h, j = 0..k (half-integer
// multiples of h when k is odd).
template <typename F>
double central_difference(F &&f, int k, double h) {
  double acc = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double w = (j % 2 == 0 ? 1.0 : -1.0) * binom(k, j);
    const double x = (0.5 * static_cast<double>(k) - static_cast<double>(j)) * h;
    acc += w * f(x);
  }
  return acc / std::pow(h, k);
}

}  // namespace detail

// Order of detuning robustness of a phase list: the smallest k >= 1 for
// which the k-th derivative of the sign-minimized rephasing error with
// respect to Delta/Omega does not vanish at Delta = 0. Estimated with
// central finite differences at a base step near 1e-2 (wider for high k,
// where roundoff amplification would otherwise swamp the signal), refined
// by two Richardson extrapolation levels, and compared against a
// roundoff-scaled noise floor. Returns nullopt when every order up to 12 is
// below the floor ("beyond resolution"). Larger value = flatter error
// around zero detuning.
//
// `base` must be a resonant pi pulse (area pi); xi is held at 0.
inline std::optional<int> detuning_order(const PhaseList &p,
                                         const RectPulse &base) {
  if (std::abs(base.area() - std::numbers::pi) > 1e-9) {
    throw std::invalid_argument("detuning_order: base pulse area must be pi");
  }
  auto f = [&](double delta_over_omega) {
    return rephasing_error_sign_min(
        sequence_propagator_rect(p, base, 0.0, delta_over_omega));
  };
  constexpr int kMaxOrder = 12;
  constexpr double kEvalNoise = 1e-13;  // roundoff scale of one f() call
  for (int k = 1; k <= kMaxOrder; ++k) {
    // Wider stencils for higher orders: the binomial weights amplify
    // roundoff by ~2^k / h^k, which at h = 1e-2 is hopeless beyond k ~ 6.
    double h = 0.01;
    if (k > 4) h = 0.02;
    if (k > 6) h = 0.04;
    if (k > 8) h = 0.08;
    if (k > 10) h = 0.16;
    const double d0 = detail::central_difference(f, k, h);
    const double d1 = detail::central_difference(f, k, 0.5 * h);
    const double d2 = detail::central_difference(f, k, 0.25 * h);
    // Two Richardson levels kill the h^2 and h^4 truncation terms, so
    // leakage from the next nonvanishing derivatives does not masquerade as
    // a signal at order k.
    const double r0 = (4.0 * d1 - d0) / 3.0;
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double r = (16.0 * r1 - r0) / 15.0;
    const double floor =
        100.0 * kEvalNoise * std::pow(2.0, k) / std::pow(0.25 * h, k);
    if (std::abs(r) > std::max(floor, 1e-8) && r0 * r1 > 0.0) {
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace topodd
