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

#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace topodd {

// An exact rational multiple of pi, kept in lowest terms and normalized to
// [0, 2*pi), i.e. 0 <= numerator/denominator < 2. Sequence phase tables are
// exact rationals, so keeping the arithmetic in integers lets tests compare
// phase lists for equality instead of within a tolerance. Conversion to
// floating-point radians happens only when a propagator is evaluated.
class Phase {
 public:
  constexpr Phase() = default;

  Phase(std::int64_t numerator, std::int64_t denominator)
      : num_(numerator), den_(denominator) {
    if (den_ == 0) {
      throw std::invalid_argument("Phase: zero denominator");
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    normalize();
  }

  static Phase zero() { return {}; }
  static Phase pi() { return {1, 1}; }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  double radians() const {
    return static_cast<double>(num_) * std::numbers::pi /
           static_cast<double>(den_);
  }

  Phase operator+(const Phase &other) const {
    return {num_ * other.den_ + other.num_ * den_, den_ * other.den_};
  }
  Phase operator-(const Phase &other) const {
    return {num_ * other.den_ - other.num_ * den_, den_ * other.den_};
  }
  Phase operator-() const { return {-num_, den_}; }

  // phi + pi, reduced back into [0, 2*pi).
  Phase plus_pi() const { return {num_ + den_, den_}; }

  bool operator==(const Phase &other) const = default;

  bool is_zero() const { return num_ == 0; }
  // True when the phase is 0 or pi, i.e. sin(phi) == 0 exactly. Two M(phi)
  // generator matrices commute precisely when their phase difference has
  // this property.
  bool is_multiple_of_pi() const { return den_ == 1; }

  // "0", "1", "4/3", ... understood as multiples of pi.
  std::string fraction_str() const {
    if (den_ == 1) {
      return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    const std::int64_t period = 2 * den_;
    num_ %= period;
    if (num_ < 0) {
      num_ += period;
    }
    // A reduction such as 4/2 -> 2/1 can reappear after the mod step.
    const std::int64_t g2 = std::gcd(num_, den_);
    if (g2 > 1) {
      num_ /= g2;
      den_ /= g2;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace topodd
