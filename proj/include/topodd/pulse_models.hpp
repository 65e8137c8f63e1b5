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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "topodd/phase.hpp"
#include "topodd/su2.hpp"

namespace topodd {

// Sign and unit conventions, fixed here and used by every other module:
//
//   H(t) = (1/2) [[ Delta(t),            Omega(t) e^{i phi} ]
//                 [ Omega(t) e^{-i phi}, -Delta(t)           ]]
//
// with Omega, Delta in rad/s, t in seconds, and dU/dt = -i H(t) U. For
// constant Omega, Delta over a duration T this integrates in closed form to
// the rect_propagator below; Delta = Omega = 0 gives the identity. The
// rotating-frame drive phase phi enters only as b -> b e^{i phi}, because
// H(phi) is the diagonal conjugation Z H(0) Z^dagger with
// Z = diag(e^{i phi/2}, e^{-i phi/2}).

// Rectangular pulse: constant Rabi rate and detuning over `duration`.
struct RectPulse {
  double rabi = 0.0;      // Omega, rad/s
  double detuning = 0.0;  // Delta, rad/s
  double duration = 0.0;  // seconds
  Phase phase{};

  double area() const { return rabi * duration; }
};

// Closed-form propagator of a rectangular pulse. With the generalized Rabi
// rate W = sqrt(Omega^2 + Delta^2):
//
//   a = cos(W T / 2) - i (Delta / W) sin(W T / 2)
//   b = -i (Omega / W) sin(W T / 2) e^{i phi}
inline Unitary2 rect_propagator(const RectPulse &p) {
  const double w = std::hypot(p.rabi, p.detuning);
  if (w == 0.0) {
    return identity();
  }
  const double half = 0.5 * w * p.duration;
  const double s = std::sin(half);
  const Complex a(std::cos(half), -(p.detuning / w) * s);
  const Complex b = Complex(0.0, -(p.rabi / w) * s) * exp_i(p.phase.radians());
  return {a, b};
}

// Free evolution for `tau` seconds at constant detuning: a = e^{-i Delta
// tau / 2}, b = 0. Matches rect_propagator with Omega = 0.
inline Unitary2 free_propagator(double detuning, double tau) {
  return {exp_i(-0.5 * detuning * tau), Complex(0.0, 0.0)};
}

// Time-dependent pulse sampled on a uniform grid over [times.front(),
// times.back()]. Between samples the profile is piecewise linear; the
// integrator treats that interpolant as the exact model.
struct ShapedPulse {
  enum class Model { kLandauZener, kAllenEberly, kCustom };

  std::vector<double> times;  // uniform, strictly increasing, size >= 2
  std::vector<double> rabi;   // Omega(t_i), rad/s
  std::vector<double> detuning;  // Delta(t_i), rad/s
  Phase phase{};
  Model model = Model::kCustom;

  std::size_t size() const { return times.size(); }
};

namespace detail {

// Symmetric uniform grid over [-half_window, +half_window]. Built so that
// t[n-1-i] == -t[i] exactly in floating point; the even/odd symmetry checks
// on the sampled profiles then hold to roundoff.
inline std::vector<double> symmetric_grid(double half_window,
                                          std::size_t points) {
  std::vector<double> t(points);
  const double scale = half_window / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const auto k = static_cast<double>(2 * i + 1) - static_cast<double>(points);
    t[i] = k * scale;
  }
  return t;
}

inline void require_grid(std::size_t points) {
  if (points < 64) {
    throw std::invalid_argument("shaped pulse: need at least 64 grid points");
  }
}

}  // namespace detail

// Landau-Zener profile: constant Rabi rate, detuning swept linearly through
// zero. Omega(t) is even and Delta(t) odd on the symmetric window, so the
// propagator's diagonal element is real (up to integration error).
inline ShapedPulse make_lz_pulse(double rabi0, double sweep_rate,
                                 double half_window, std::size_t grid_points,
                                 const Phase &phase = Phase::zero()) {
  detail::require_grid(grid_points);
  if (half_window <= 0.0) {
    throw std::invalid_argument("make_lz_pulse: half_window must be positive");
  }
  ShapedPulse p;
  p.times = detail::symmetric_grid(half_window, grid_points);
  p.rabi.assign(grid_points, rabi0);
  p.detuning.resize(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    p.detuning[i] = sweep_rate * p.times[i];
  }
  p.phase = phase;
  p.model = ShapedPulse::Model::kLandauZener;
  return p;
}

// Allen-Eberly profile: Omega(t) = Omega0 sech(t/width), Delta(t) =
// Delta0 tanh(t/width), truncated at +- window_mult * width. Same even/odd
// structure as the Landau-Zener profile.
inline ShapedPulse make_ae_pulse(double rabi0, double detuning0, double width,
                                 std::size_t grid_points,
                                 const Phase &phase = Phase::zero(),
                                 double window_mult = 8.0) {
  detail::require_grid(grid_points);
  if (width <= 0.0 || window_mult <= 0.0) {
    throw std::invalid_argument("make_ae_pulse: width and window_mult must be positive");
  }
  ShapedPulse p;
  p.times = detail::symmetric_grid(window_mult * width, grid_points);
  p.rabi.resize(grid_points);
  p.detuning.resize(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = p.times[i] / width;
    p.rabi[i] = rabi0 / std::cosh(x);
    p.detuning[i] = detuning0 * std::tanh(x);
  }
  p.phase = phase;
  p.model = ShapedPulse::Model::kAllenEberly;
  return p;
}

// Same samples traversed backwards in time.
inline ShapedPulse reverse(const ShapedPulse &p) {
  ShapedPulse r = p;
  std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.rabi[i] = p.rabi[n - 1 - i];
    r.detuning[i] = p.detuning[n - 1 - i];
  }
  r.model = ShapedPulse::Model::kCustom;
  return r;
}

// Thrown when the step-halving loop in integrate_propagator runs out of
// refinement levels before the requested tolerance is met.
struct IntegrationError : std::runtime_error {
  IntegrationError(const std::string &what, double defect)
      : std::runtime_error(what), achieved_defect(defect) {}
  double achieved_defect;
};

namespace detail {

// One classical RK4 sweep over the piecewise-linear profile with `substeps`
// steps per sample interval. Integrates the first column u = (a, -b*) of
// dU/dt = -i H(t) U at phi = 0; the drive phase is applied analytically by
// the caller. Fixed-step on purpose: results are reproducible bit for bit
// across runs and worker counts.
inline void rk4_sweep(const ShapedPulse &p, std::size_t substeps, Complex &a_out,
                      Complex &b_out) {
  const std::size_t intervals = p.size() - 1;
  Complex u1(1.0, 0.0);
  Complex u2(0.0, 0.0);
  const Complex mi(0.0, -1.0);
  for (std::size_t seg = 0; seg < intervals; ++seg) {
    const double t0 = p.times[seg];
    const double dt_seg = p.times[seg + 1] - t0;
    const double h = dt_seg / static_cast<double>(substeps);
    const double om0 = p.rabi[seg];
    const double dom = p.rabi[seg + 1] - om0;
    const double de0 = p.detuning[seg];
    const double dde = p.detuning[seg + 1] - de0;
    for (std::size_t s = 0; s < substeps; ++s) {
      // Profile values at the step start, midpoint, and end, exact for the
      // piecewise-linear interpolant.
      const double f0 = static_cast<double>(s) / static_cast<double>(substeps);
      const double fm = (static_cast<double>(s) + 0.5) / static_cast<double>(substeps);
      const double f1 = static_cast<double>(s + 1) / static_cast<double>(substeps);
      const double om_0 = om0 + dom * f0, de_0 = de0 + dde * f0;
      const double om_m = om0 + dom * fm, de_m = de0 + dde * fm;
      const double om_1 = om0 + dom * f1, de_1 = de0 + dde * f1;

      auto rhs = [&mi](double om, double de, Complex v1, Complex v2, Complex &d1,
                       Complex &d2) {
        d1 = mi * 0.5 * (de * v1 + om * v2);
        d2 = mi * 0.5 * (om * v1 - de * v2);
      };

      Complex k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
      rhs(om_0, de_0, u1, u2, k1a, k1b);
      rhs(om_m, de_m, u1 + 0.5 * h * k1a, u2 + 0.5 * h * k1b, k2a, k2b);
      rhs(om_m, de_m, u1 + 0.5 * h * k2a, u2 + 0.5 * h * k2b, k3a, k3b);
      rhs(om_1, de_1, u1 + h * k3a, u2 + h * k3b, k4a, k4b);
      u1 += (h / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
      u2 += (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    }
  }
  a_out = u1;
  b_out = -std::conj(u2);  // second column of an SU(2) matrix is (-u2*, u1*)
}

}  // namespace detail

// Numerical propagator for a shaped pulse. Runs fixed-step RK4 sweeps with
// 1, 2, 4, ... substeps per sample interval until two successive sweeps
// agree within `tol` (step-halving error control), then renormalizes the
// determinant drift away. Throws IntegrationError if the refinement ladder
// is exhausted first.
inline Unitary2 integrate_propagator(const ShapedPulse &p, double tol = 1e-10) {
  if (p.size() < 2 || p.rabi.size() != p.size() ||
      p.detuning.size() != p.size()) {
    throw std::invalid_argument("integrate_propagator: malformed pulse");
  }
  constexpr std::size_t kMaxLevels = 12;  // up to 2^11 substeps per interval
  Complex a_prev, b_prev;
  detail::rk4_sweep(p, 1, a_prev, b_prev);
  double diff = 0.0;
  for (std::size_t level = 1; level < kMaxLevels; ++level) {
    Complex a_cur, b_cur;
    detail::rk4_sweep(p, std::size_t{1} << level, a_cur, b_cur);
    diff = std::max(std::abs(a_cur - a_prev), std::abs(b_cur - b_prev));
    a_prev = a_cur;
    b_prev = b_cur;
    if (diff < tol) {
      Unitary2 u{a_prev, b_prev};
      const double defect = unitarity_defect(u);
      if (defect > tol) {
        throw IntegrationError(
            "integrate_propagator: unitarity defect " + std::to_string(defect) +
                " exceeds tolerance after convergence",
            defect);
      }
      const double norm = std::sqrt(std::norm(u.a) + std::norm(u.b));
      u.a /= norm;
      u.b /= norm;
      u.b *= exp_i(p.phase.radians());
      return u;
    }
  }
  throw IntegrationError(
      "integrate_propagator: no convergence within refinement limit, last "
      "sweep-to-sweep difference " +
          std::to_string(diff),
      diff);
}

}  // namespace topodd
