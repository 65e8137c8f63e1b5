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
#include "topodd/su2.hpp"

using topodd::Complex;
using topodd::Mat2;
using topodd::Phase;
using topodd::Unitary2;

namespace {

constexpr double kPi = std::numbers::pi;

Unitary2 random_unitary(std::mt19937 &rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const double theta = angle(rng) / 2.0;
  const double alpha = angle(rng);
  const double beta = angle(rng);
  Unitary2 u;
  u.a = std::cos(theta) * topodd::exp_i(alpha);
  u.b = std::sin(theta) * topodd::exp_i(beta);
  return u;
}

}  // namespace

TEST_CASE("identity has trivial entries") {
  const Unitary2 id = topodd::identity();
  CHECK(id.a == Complex(1.0, 0.0));
  CHECK(id.b == Complex(0.0, 0.0));
  CHECK(topodd::rephasing_error(id) == 0.0);
}

TEST_CASE("two pi pulses about x compose to minus identity") {
  const Unitary2 x = topodd::resonant_pulse(kPi, Phase::zero());
  const Unitary2 xx = topodd::compose(x, x);
  CHECK(std::abs(xx.a - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(xx.b) < 1e-15);
  CHECK(topodd::rephasing_error(xx) == Catch::Approx(2.0));
  CHECK(topodd::rephasing_error_sign_min(xx) < 1e-15);
}

TEST_CASE("resonant pulse entries follow the axis phase") {
  const Unitary2 u = topodd::resonant_pulse(kPi / 2.0, Phase(1, 2));
  const double s = std::sqrt(0.5);
  CHECK(std::abs(u.a - Complex(s, 0.0)) < 1e-15);
  CHECK(std::abs(u.b - Complex(s, 0.0)) < 1e-15);
  const Unitary2 v = topodd::resonant_pulse(kPi, Phase::zero());
  CHECK(std::abs(v.a) < 1e-15);
  CHECK(std::abs(v.b - Complex(0.0, -1.0)) < 1e-15);
}

TEST_CASE("composition with the dagger returns the identity") {
  std::mt19937 rng(20260818);
  for (int i = 0; i < 50; ++i) {
    const Unitary2 u = random_unitary(rng);
    const Unitary2 prod = topodd::compose(topodd::dagger(u), u);
    CHECK(topodd::rephasing_error(prod) < 1e-14);
  }
}

TEST_CASE("composition preserves unitarity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Unitary2 u = random_unitary(rng);
    const Unitary2 v = random_unitary(rng);
    CHECK(topodd::unitarity_defect(topodd::compose(u, v)) < 1e-14);
  }
}

TEST_CASE("composition matches explicit matrix multiplication") {
  std::mt19937 rng(42);
  for (int i = 0; i < 50; ++i) {
    const Unitary2 u = random_unitary(rng);
    const Unitary2 v = random_unitary(rng);
    const Mat2 direct = topodd::to_matrix(topodd::compose(u, v));
    const Mat2 viaMat =
        topodd::mat_mul(topodd::to_matrix(u), topodd::to_matrix(v));
    CHECK(topodd::max_abs_diff(direct, viaMat) < 1e-14);
  }
}

TEST_CASE("rephasing error measures distance from the identity") {
  Unitary2 u;
  u.a = Complex(0.0, 0.0);
  u.b = Complex(0.0, -1.0);
  CHECK(topodd::rephasing_error(u) == Catch::Approx(2.0));
  CHECK(topodd::rephasing_error_phase_insensitive(u) == Catch::Approx(2.0));
  Unitary2 rot;
  rot.a = topodd::exp_i(0.3);
  rot.b = Complex(0.0, 0.0);
  CHECK(topodd::rephasing_error(rot) ==
        Catch::Approx(std::abs(topodd::exp_i(0.3) - 1.0)));
  CHECK(topodd::rephasing_error_phase_insensitive(rot) < 1e-15);
}

TEST_CASE("sign minimization ignores the global SU(2) sign") {
  const Unitary2 minus = topodd::negate(topodd::identity());
  CHECK(topodd::rephasing_error(minus) == Catch::Approx(2.0));
  CHECK(topodd::rephasing_error_sign_min(minus) == 0.0);
}

TEST_CASE("transition probability is the off-diagonal weight") {
  const Unitary2 u = topodd::resonant_pulse(kPi / 3.0, Phase::zero());
  CHECK(topodd::transition_probability(u) ==
        Catch::Approx(std::sin(kPi / 6.0) * std::sin(kPi / 6.0)));
}

TEST_CASE("the anchor matrix squares to the identity") {
  for (double phi : {0.0, 0.7, kPi / 2.0, 2.9}) {
    const Mat2 m = topodd::m_matrix(phi);
    const Mat2 mm = topodd::mat_mul(m, m);
    const Mat2 id = topodd::to_matrix(topodd::identity());
    CHECK(topodd::max_abs_diff(mm, id) < 1e-15);
  }
}

TEST_CASE("anchor-matrix commutator is proportional to sigma z") {
  const Mat2 c = topodd::commutator_m(0.0, kPi / 2.0);
  CHECK(std::abs(c[0] - Complex(0.0, -2.0)) < 1e-15);
  CHECK(std::abs(c[1]) < 1e-15);
  CHECK(std::abs(c[2]) < 1e-15);
  CHECK(std::abs(c[3] - Complex(0.0, 2.0)) < 1e-15);

  for (double p1 : {0.1, 1.3, 2.2}) {
    for (double p2 : {0.4, 2.8}) {
      const Mat2 g = topodd::commutator_m(p1, p2);
      const Complex expect(0.0, 2.0 * std::sin(p1 - p2));
      CHECK(std::abs(g[0] - expect) < 1e-15);
      CHECK(std::abs(g[3] + expect) < 1e-15);
      CHECK(std::abs(g[1]) < 1e-15);
      CHECK(std::abs(g[2]) < 1e-15);
    }
  }
}

TEST_CASE("equal-phase anchor matrices commute") {
  const Mat2 c = topodd::commutator_m(1.1, 1.1);
  const Mat2 zero{};
  CHECK(topodd::max_abs_diff(c, zero) < 1e-15);
}

TEST_CASE("resonant pulse equals the anchor-matrix exponential") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
  for (int i = 0; i < 25; ++i) {
    const double area = dist(rng);
    const int num = static_cast<int>(dist(rng) * 3.0);
    const Phase phi(num, 7);
    const Mat2 m = topodd::m_matrix(phi.radians());
    const double c = std::cos(area / 2.0);
    const double s = std::sin(area / 2.0);
    Mat2 expect;
    for (int e = 0; e < 4; ++e) {
      expect[e] = Complex(0.0, -s) * m[e];
    }
    expect[0] += c;
    expect[3] += c;
    const Mat2 got = topodd::to_matrix(topodd::resonant_pulse(area, phi));
    CHECK(topodd::max_abs_diff(got, expect) < 1e-14);
  }
}

TEST_CASE("pi-shifted resonant pulse is the inverse pulse") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
  for (int i = 0; i < 25; ++i) {
    const double area = dist(rng);
    const Phase phi(i, 13);
    const Unitary2 u = topodd::resonant_pulse(area, phi);
    const Unitary2 v = topodd::resonant_pulse(area, phi.plus_pi());
    const Unitary2 prod = topodd::compose(v, u);
    CHECK(topodd::rephasing_error(prod) < 1e-14);
  }
}
