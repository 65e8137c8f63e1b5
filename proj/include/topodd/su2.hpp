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
#include <complex>

#include "topodd/phase.hpp"

namespace topodd {

using Complex = std::complex<double>;

inline Complex exp_i(double angle) { return std::polar(1.0, angle); }

// SU(2) propagator in Cayley-Klein form,
//
//     U = [  a   b ]
//         [ -b*  a* ]
//
// with |a|^2 + |b|^2 = 1. Every propagator in this library (resonant pulse,
// detuned rectangular pulse, integrated shaped pulse, free evolution) is one
// of these, so sequence composition is two complex multiply-adds per step.
struct Unitary2 {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
};

inline Unitary2 identity() { return {}; }

// second * first as matrices; `first` acts first in time.
inline Unitary2 compose(const Unitary2 &second, const Unitary2 &first) {
  return {second.a * first.a - second.b * std::conj(first.b),
          second.a * first.b + second.b * std::conj(first.a)};
}

inline Unitary2 dagger(const Unitary2 &u) { return {std::conj(u.a), -u.b}; }

inline Unitary2 negate(const Unitary2 &u) { return {-u.a, -u.b}; }

// Resonant pulse of area A about the equatorial axis selected by `phase`:
// a = cos(A/2), b = -i sin(A/2) e^{i phi}. A = pi gives complete population
// inversion; a pulse with phase phi + pi is the exact inverse of the pulse
// with phase phi (same a, negated b), which is what the sequence
// constructions in sequences.hpp exploit.
inline Unitary2 resonant_pulse(double area, const Phase &phase) {
  const double half = 0.5 * area;
  const Complex b = Complex(0.0, -1.0) * std::sin(half) * exp_i(phase.radians());
  return {Complex(std::cos(half), 0.0), b};
}

// Rephasing error eps = |U11 - 1| + |U12|. Zero exactly when U is the
// identity; sensitive to the global SU(2) sign (eps(-I) = 2).
inline double rephasing_error(const Unitary2 &u) {
  return std::abs(u.a - 1.0) + std::abs(u.b);
}

// Diagnostic variant that ignores the phase of U11: eps' = 1 - |U11| + |U12|.
// Not part of the rephasing-error definition above; reported alongside it so
// that a residual global phase can be told apart from a genuine rotation.
inline double rephasing_error_phase_insensitive(const Unitary2 &u) {
  return 1.0 - std::abs(u.a) + std::abs(u.b);
}

// min(eps(U), eps(-U)): treats the two SU(2) lifts of the same rotation as
// equivalent. Sequences of exact pi pulses may compose to -I on resonance,
// which is the identity operation physically.
inline double rephasing_error_sign_min(const Unitary2 &u) {
  return std::min(rephasing_error(u), rephasing_error(negate(u)));
}

// p = |U12|^2, the population transferred between the basis states.
inline double transition_probability(const Unitary2 &u) {
  return std::norm(u.b);
}

// | |a|^2 + |b|^2 - 1 |; zero for an exact SU(2) element.
inline double unitarity_defect(const Unitary2 &u) {
  return std::abs(std::norm(u.a) + std::norm(u.b) - 1.0);
}

// Dense 2x2 complex matrix, row-major. Used only for the generator algebra
// checks; propagators stay in Cayley-Klein form.
using Mat2 = std::array<Complex, 4>;

inline Mat2 to_matrix(const Unitary2 &u) {
  return {u.a, u.b, -std::conj(u.b), std::conj(u.a)};
}

inline Mat2 mat_mul(const Mat2 &x, const Mat2 &y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

inline Mat2 mat_sub(const Mat2 &x, const Mat2 &y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

inline double max_abs_diff(const Mat2 &x, const Mat2 &y) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    m = std::max(m, std::abs(x[i] - y[i]));
  }
  return m;
}

// Pulse generator M(phi) = [[0, e^{i phi}], [e^{-i phi}, 0]]. M(phi)^2 = I,
// and the resonant pulse is exp(-i (A/2) M(phi)).
inline Mat2 m_matrix(double phase_radians) {
  const Complex e = exp_i(phase_radians);
  return {Complex(0.0, 0.0), e, std::conj(e), Complex(0.0, 0.0)};
}

// [M(phi1), M(phi2)] = 2i sin(phi1 - phi2) sigma_z. Nonzero whenever the
// phase difference is not a multiple of pi, which is why sequential pulses
// with generic phases cannot be merged into a single exponential.
inline Mat2 commutator_m(double phi1_radians, double phi2_radians) {
  const Mat2 m1 = m_matrix(phi1_radians);
  const Mat2 m2 = m_matrix(phi2_radians);
  return mat_sub(mat_mul(m1, m2), mat_mul(m2, m1));
}

}  // namespace topodd
