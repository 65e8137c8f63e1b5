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

// Compares the robust operating window of several sequences along both error
// axes. Along the pulse-area axis the Tn family is flat at p0 = 1, so its
// window covers the whole scanned range; along the detuning axis the window
// widens with the sequence order.

#include <cstdio>
#include <numbers>
#include <vector>

#include "topodd/topodd.hpp"

namespace {

topodd::Protocol make_protocol(const topodd::PhaseList &phases) {
  topodd::Protocol proto;
  proto.prep = topodd::PauliState::kOne;
  proto.seq.phases = phases;
  proto.seq.base.rabi = 2.0 * std::numbers::pi * 25e6;
  proto.seq.base.duration = 20e-9;
  return proto;
}

}  // namespace

int main() {
  std::vector<topodd::PhaseList> sequences;
  for (int n : {2, 6, 10, 14}) {
    sequences.push_back(topodd::tn_phases(n));
  }
  sequences.push_back(topodd::xy8_phases());
  sequences.push_back(topodd::kdd_phases());
  sequences.push_back(topodd::cpmg_phases(4));

  std::printf("robust window at p0 >= 0.99, scan range [-1, 1]\n");
  std::printf("%-8s %-18s %-18s\n", "name", "area-axis width",
              "detuning-axis width");
  for (const topodd::PhaseList &p : sequences) {
    const topodd::Protocol proto = make_protocol(p);
    const topodd::ScanResult area =
        topodd::scan_1d(proto, topodd::ScanAxis::kArea, -1.0, 1.0, 201, 4);
    const topodd::ScanResult detuning =
        topodd::scan_1d(proto, topodd::ScanAxis::kDetuning, -1.0, 1.0, 201, 4);
    std::printf("%-8s %-18.4f %-18.4f\n", p.name.c_str(),
                topodd::robust_width(area, 0.01),
                topodd::robust_width(detuning, 0.01));
  }
  return 0;
}
