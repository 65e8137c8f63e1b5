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

#include <cmath>
#include <numbers>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "topodd/phase.hpp"
#include "topodd/pulse_models.hpp"
#include "topodd/su2.hpp"

using topodd::Complex;
using topodd::Phase;
using topodd::RectPulse;
using topodd::ShapedPulse;
using topodd::Unitary2;

namespace {

constexpr double kPi = std::numbers::pi;

// Constant-profile pulse on a symmetric grid; its piecewise-linear
// interpolation is exact, so the integrator should match the closed form.
ShapedPulse constant_pulse(double rabi, double detuning, double duration,
                           std::size_t points, const Phase &phase) {
  ShapedPulse p;
  p.model = ShapedPulse::Model::kCustom;
  p.times = topodd::detail::symmetric_grid(0.5 * duration, points);
  p.rabi.assign(points, rabi);
  p.detuning.assign(points, detuning);
  p.phase = phase;
  return p;
}

double max_entry_diff(const Unitary2 &u, const Unitary2 &v) {
  return std::max(std::abs(u.a - v.a), std::abs(u.b - v.b));
}

}  // namespace

TEST_CASE("rectangular pulse reduces to the resonant pulse at zero detuning") {
  RectPulse p;
  p.rabi = 2.0 * kPi * 25e6;
  p.duration = 20e-9;
  p.detuning = 0.0;
  p.phase = Phase(4, 3);
  CHECK(p.area() == Catch::Approx(kPi).epsilon(1e-15));
  const Unitary2 rect = topodd::rect_propagator(p);
  const Unitary2 res = topodd::resonant_pulse(p.area(), p.phase);
  CHECK(max_entry_diff(rect, res) < 1e-15);
}

TEST_CASE("rectangular pulse matches the closed form at a frozen point") {
  RectPulse p;
  p.rabi = 3.0;
  p.detuning = 4.0;
  p.duration = 1.0;
  p.phase = Phase(1, 2);
  const Unitary2 u = topodd::rect_propagator(p);
  const double s = std::sin(2.5);
  const Complex expect_a(std::cos(2.5), -0.8 * s);
  const Complex expect_b = Complex(0.0, -0.6 * s) * topodd::exp_i(kPi / 2.0);
  CHECK(std::abs(u.a - expect_a) < 1e-15);
  CHECK(std::abs(u.b - expect_b) < 1e-15);
}

TEST_CASE("zero-drive rectangular pulse is free evolution") {
  RectPulse p;
  p.rabi = 0.0;
  p.detuning = 1.7;
  p.duration = 0.9;
  const Unitary2 rect = topodd::rect_propagator(p);
  const Unitary2 free = topodd::free_propagator(1.7, 0.9);
  CHECK(max_entry_diff(rect, free) < 1e-15);
  CHECK(std::abs(free.a - topodd::exp_i(-1.7 * 0.9 / 2.0)) < 1e-15);
  CHECK(std::abs(free.b) == 0.0);
}

TEST_CASE("rectangular propagators stay unitary over random draws") {
  std::mt19937 rng(314159);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    RectPulse p;
    p.rabi = std::abs(dist(rng));
    p.detuning = dist(rng);
    p.duration = std::abs(dist(rng)) * 0.1;
    p.phase = Phase(i, 17);
    CHECK(topodd::unitarity_defect(topodd::rect_propagator(p)) < 1e-14);
  }
}

TEST_CASE("integrator reproduces the rectangular closed form") {
  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    const double omega = uniform(rng) * 2.0 * kPi;
    const double delta = (uniform(rng) - 0.5) * 2.0 * kPi;
    const double w_tilde = std::hypot(omega, delta);
    const double duration =
        w_tilde == 0.0 ? 1.0 : uniform(rng) * 10.0 * kPi / w_tilde;
    RectPulse p;
    p.rabi = omega;
    p.detuning = delta;
    p.duration = duration;
    p.phase = Phase(i, 11);
    const ShapedPulse shaped =
        constant_pulse(omega, delta, duration, 128, p.phase);
    const Unitary2 exact = topodd::rect_propagator(p);
    const Unitary2 numeric = topodd::integrate_propagator(shaped, 1e-10);
    INFO("draw " << i << " omega=" << omega << " delta=" << delta
                 << " T=" << duration);
    CHECK(max_entry_diff(exact, numeric) < 1e-8);
  }
}

TEST_CASE("sample grids are exactly symmetric about zero") {
  const std::vector<double> t = topodd::detail::symmetric_grid(1.0, 101);
  REQUIRE(t.size() == 101);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i] == -t[t.size() - 1 - i]);
  }
  CHECK(t.front() == -1.0);
  CHECK(t.back() == 1.0);
}

TEST_CASE("chirped-drive profiles have even drive and odd sweep") {
  const ShapedPulse lz = topodd::make_lz_pulse(1.0, 2.0, 3.0, 129, Phase::zero());
  REQUIRE(lz.size() == 129);
  CHECK(lz.model == ShapedPulse::Model::kLandauZener);
  for (std::size_t i = 0; i < lz.size(); ++i) {
    const std::size_t j = lz.size() - 1 - i;
    CHECK(lz.rabi[i] == 1.0);
    CHECK(lz.detuning[i] == -lz.detuning[j]);
    CHECK(lz.detuning[i] == 2.0 * lz.times[i]);
  }
  CHECK(lz.times.back() == 3.0);

  const ShapedPulse ae =
      topodd::make_ae_pulse(1.5, 0.7, 0.25, 129, Phase::zero());
  REQUIRE(ae.size() == 129);
  CHECK(ae.model == ShapedPulse::Model::kAllenEberly);
  CHECK(ae.times.back() == 8.0 * 0.25);
  for (std::size_t i = 0; i < ae.size(); ++i) {
    const std::size_t j = ae.size() - 1 - i;
    CHECK(std::abs(ae.rabi[i] - ae.rabi[j]) < 1e-15);
    CHECK(std::abs(ae.detuning[i] + ae.detuning[j]) < 1e-15);
    CHECK(ae.rabi[i] ==
          Catch::Approx(1.5 / std::cosh(ae.times[i] / 0.25)).epsilon(1e-14));
    CHECK(ae.detuning[i] ==
          Catch::Approx(0.7 * std::tanh(ae.times[i] / 0.25))
              .margin(1e-14));
  }
  const std::size_t mid = ae.size() / 2;
  CHECK(ae.times[mid] == 0.0);
  CHECK(ae.rabi[mid] == 1.5);
  CHECK(ae.detuning[mid] == 0.0);
}

TEST_CASE("even-drive odd-sweep propagators have a real diagonal") {
  for (double rabi0 : {0.8, 2.0, 4.0}) {
    for (double slope : {0.5, 3.0}) {
      const ShapedPulse lz =
          topodd::make_lz_pulse(rabi0, slope, 4.0, 257, Phase::zero());
      const Unitary2 u = topodd::integrate_propagator(lz, 1e-10);
      INFO("lz rabi0=" << rabi0 << " slope=" << slope);
      CHECK(std::abs(u.a.imag()) < 1e-8);
    }
    for (double detuning0 : {0.3, 1.1}) {
      const ShapedPulse ae =
          topodd::make_ae_pulse(rabi0, detuning0, 0.5, 257, Phase::zero());
      const Unitary2 u = topodd::integrate_propagator(ae, 1e-10);
      INFO("ae rabi0=" << rabi0 << " detuning0=" << detuning0);
      CHECK(std::abs(u.a.imag()) < 1e-8);
    }
  }
}

TEST_CASE("axis phase enters the integrated propagator analytically") {
  const ShapedPulse base = topodd::make_ae_pulse(2.0, 0.4, 0.5, 129, Phase::zero());
  ShapedPulse rotated = base;
  rotated.phase = Phase(4, 3);
  const Unitary2 u0 = topodd::integrate_propagator(base, 1e-10);
  const Unitary2 u1 = topodd::integrate_propagator(rotated, 1e-10);
  CHECK(u0.a == u1.a);
  CHECK(std::abs(u1.b - u0.b * topodd::exp_i(Phase(4, 3).radians())) < 1e-15);
}

TEST_CASE("profile reversal flips the sample order") {
  const ShapedPulse lz = topodd::make_lz_pulse(1.0, 2.0, 3.0, 65, Phase(1, 4));
  const ShapedPulse rev = topodd::reverse(lz);
  REQUIRE(rev.size() == lz.size());
  for (std::size_t i = 0; i < lz.size(); ++i) {
    const std::size_t j = lz.size() - 1 - i;
    CHECK(rev.rabi[i] == lz.rabi[j]);
    CHECK(rev.detuning[i] == lz.detuning[j]);
    CHECK(rev.times[i] == lz.times[i]);
  }
}

TEST_CASE("pi-shifted resonant shaped pulse inverts the original") {
  // With zero detuning and a time-symmetric drive the diagonal entry is real
  // and the off-diagonal purely imaginary before the axis phase is applied,
  // so shifting the axis phase by pi yields the inverse propagator.
  ShapedPulse p;
  p.model = ShapedPulse::Model::kCustom;
  p.times = topodd::detail::symmetric_grid(1.0, 129);
  p.rabi.resize(p.times.size());
  p.detuning.assign(p.times.size(), 0.0);
  for (std::size_t i = 0; i < p.times.size(); ++i) {
    p.rabi[i] = 2.0 / std::cosh(3.0 * p.times[i]);
  }
  p.phase = Phase(2, 7);
  ShapedPulse shifted = p;
  shifted.phase = p.phase.plus_pi();
  const Unitary2 u = topodd::integrate_propagator(p, 1e-12);
  const Unitary2 v = topodd::integrate_propagator(shifted, 1e-12);
  const Unitary2 prod = topodd::compose(v, u);
  CHECK(topodd::rephasing_error(prod) < 1e-10);
}

TEST_CASE("integrator reports failure to converge") {
  const ShapedPulse ae = topodd::make_ae_pulse(2.0, 0.4, 0.5, 129, Phase::zero());
  try {
    topodd::integrate_propagator(ae, 0.0);
    FAIL("expected IntegrationError");
  } catch (const topodd::IntegrationError &e) {
    CHECK(e.achieved_defect >= 0.0);
  }
}

TEST_CASE("malformed shaped pulses are rejected") {
  ShapedPulse bad;
  bad.model = ShapedPulse::Model::kCustom;
  bad.times = {0.0, 0.5, 1.0};
  bad.rabi = {1.0, 1.0};
  bad.detuning = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(topodd::integrate_propagator(bad, 1e-8),
                  std::invalid_argument);
  CHECK_THROWS_AS(topodd::make_lz_pulse(1.0, 1.0, 1.0, 8, Phase::zero()),
                  std::invalid_argument);
}
