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

// Prints the phase table and structural verdicts for a few sequences side by
// side, which makes the difference between the Tn family and the standard
// references easy to eyeball.

#include <cstdio>
#include <vector>

#include "topodd/topodd.hpp"

int main() {
  std::vector<topodd::PhaseList> sequences;
  for (int n = 2; n <= 12; n += 2) {
    sequences.push_back(topodd::tn_phases(n));
  }
  sequences.push_back(topodd::xy4_phases());
  sequences.push_back(topodd::xy8_phases());
  sequences.push_back(topodd::kdd_phases());
  sequences.push_back(topodd::ur_phases(8));
  sequences.push_back(topodd::cpmg_phases(4));

  std::printf("%-8s %-8s %-10s %-12s %-10s %s\n", "name", "pulses", "sum",
              "palindrome", "all-order", "phases (multiples of pi)");
  for (const topodd::PhaseList &p : sequences) {
    const topodd::ConditionReport r = topodd::condition_report(p);
    std::string phases;
    for (int k = 0; k < p.size(); ++k) {
      if (k != 0) {
        phases += ", ";
      }
      phases += p.phases[k].fraction_str();
    }
    std::printf("%-8s %-8d %-10s %-12s %-10s %s\n", p.name.c_str(), p.size(),
                r.sum.satisfied ? "yes" : "no",
                r.palindrome_pi_shift ? "yes" : "no",
                r.all_orders.identity ? "yes" : "no", phases.c_str());
  }
  return 0;
}
