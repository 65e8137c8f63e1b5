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

#include <sstream>
#include <string>

#include "catch2/catch_amalgamated.hpp"
#include "topodd/scan_io.hpp"

using topodd::ScanResult;

namespace {

ScanResult sample_scan() {
  topodd::Protocol proto;
  proto.seq.phases = topodd::tn_phases(6);
  proto.seq.base.rabi = 2.0 * std::numbers::pi * 25e6;
  proto.seq.base.duration = 20e-9;
  return topodd::scan_2d(proto, -1.0, 1.0, 7, -0.3, 0.3, 5);
}

}  // namespace

TEST_CASE("CSV output starts with the metadata header") {
  const ScanResult scan = sample_scan();
  const std::string text = topodd::scan_to_csv(scan);
  CHECK(text.rfind("# sequence=T6 model=rect(", 0) == 0);
  CHECK(text.find(" prep=1 convention=ideal axes=xi[-1,1;7],"
                  "delta_over_omega[-0.29999999999999999,"
                  "0.29999999999999999;5]") != std::string::npos);
  CHECK(text.find("# generated=") != std::string::npos);
  CHECK(text.find("# columns=xi,delta_over_omega,p0,epsilon") !=
        std::string::npos);
  CHECK(text.find("\r") == std::string::npos);
}

TEST_CASE("CSV data rows cover the grid in row-major order") {
  const ScanResult scan = sample_scan();
  const std::string text = topodd::scan_to_csv(scan);
  int data_rows = 0;
  std::istringstream is(text);
  std::string line;
  std::string first_data;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') {
      if (data_rows == 0) {
        first_data = line;
      }
      ++data_rows;
    }
  }
  CHECK(data_rows == 35);
  CHECK(first_data == "-1,-0.29999999999999999," +
                          std::string(topodd::detail::fmt17(scan.p0[0])) + "," +
                          topodd::detail::fmt17(scan.epsilon[0]));
}

TEST_CASE("CSV round-trips the scan exactly") {
  const ScanResult scan = sample_scan();
  const ScanResult back = topodd::scan_from_csv(topodd::scan_to_csv(scan));
  CHECK(back.sequence == scan.sequence);
  CHECK(back.model == scan.model);
  CHECK(back.prep == scan.prep);
  CHECK(back.convention == scan.convention);
  CHECK(back.generated == scan.generated);
  REQUIRE(back.xi_values.size() == scan.xi_values.size());
  REQUIRE(back.delta_values.size() == scan.delta_values.size());
  for (std::size_t i = 0; i < scan.xi_values.size(); ++i) {
    CHECK(back.xi_values[i] == scan.xi_values[i]);
  }
  for (std::size_t j = 0; j < scan.delta_values.size(); ++j) {
    CHECK(back.delta_values[j] == scan.delta_values[j]);
  }
  REQUIRE(back.p0.size() == scan.p0.size());
  for (std::size_t k = 0; k < scan.p0.size(); ++k) {
    CHECK(back.p0[k] == scan.p0[k]);
    CHECK(back.epsilon[k] == scan.epsilon[k]);
  }
}

TEST_CASE("rewriting a parsed scan reproduces the bytes") {
  const ScanResult scan = sample_scan();
  const std::string text = topodd::scan_to_csv(scan);
  const std::string again =
      topodd::scan_to_csv(topodd::scan_from_csv(text));
  CHECK(again == text);
}

TEST_CASE("JSON mirrors the scan fields") {
  const ScanResult scan = sample_scan();
  const std::string text = topodd::scan_to_json(scan);
  CHECK(text.find("\"sequence\": \"T6\"") != std::string::npos);
  CHECK(text.find("\"prep\": \"1\"") != std::string::npos);
  CHECK(text.find("\"convention\": \"ideal\"") != std::string::npos);
  CHECK(text.find("\"xi\": [-1,") != std::string::npos);
  CHECK(text.find("\"delta_over_omega\": [-0.29999999999999999,") !=
        std::string::npos);
  CHECK(text.find("\"p0\": [") != std::string::npos);
  CHECK(text.find("\"epsilon\": [") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS(topodd::scan_from_csv("no header\n1,2,3,4\n"));
  CHECK_THROWS(topodd::scan_from_csv(
      "# sequence=x model=y prep=1 convention=ideal "
      "axes=xi[0,1;2],delta_over_omega[0,1;2]\n1,2,3\n"));
  CHECK_THROWS(topodd::scan_from_csv(
      "# sequence=x model=y prep=1 convention=ideal "
      "axes=xi[0,1;2],delta_over_omega[0,1;2]\n1,2,3,4\n"));
}

TEST_CASE("inconsistent scans are rejected by the writer") {
  ScanResult broken = sample_scan();
  broken.p0.pop_back();
  std::ostringstream os;
  CHECK_THROWS_AS(topodd::write_scan_csv(os, broken), std::invalid_argument);
}
