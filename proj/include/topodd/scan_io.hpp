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

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "topodd/simulator.hpp"

// Scan serialization. Both formats use LF line endings, '.' as the decimal
// separator, and 17 significant digits for every floating-point value, which
// is enough for the written text to parse back to the identical double. The
// CSV layout is:
//
//   # sequence=<name> model=<token> prep=<state> convention=<ideal|literal>
//     axes=xi[<lo>,<hi>;<n>],delta_over_omega[<lo>,<hi>;<m>]   (one line)
//   # generated=<ISO 8601 UTC timestamp>
//   # columns=xi,delta_over_omega,p0,epsilon
//   <xi>,<delta>,<p0>,<epsilon>                                 (n*m rows)
//
// Data rows are in row-major grid order, xi outermost. Rerunning the same
// scan reproduces the file byte for byte except the `# generated=` line.

namespace topodd {

namespace detail {

inline std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string axes_token(const ScanResult &scan) {
  std::string s = "xi[";
  s += fmt17(scan.xi_values.front());
  s += ',';
  s += fmt17(scan.xi_values.back());
  s += ';';
  s += std::to_string(scan.xi_values.size());
  s += "],delta_over_omega[";
  s += fmt17(scan.delta_values.front());
  s += ',';
  s += fmt17(scan.delta_values.back());
  s += ';';
  s += std::to_string(scan.delta_values.size());
  s += ']';
  return s;
}

inline std::string json_escape(const std::string &s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace detail

inline void write_scan_csv(std::ostream &os, const ScanResult &scan) {
  if (scan.xi_values.empty() || scan.delta_values.empty() ||
      scan.p0.size() != scan.xi_values.size() * scan.delta_values.size() ||
      scan.epsilon.size() != scan.p0.size()) {
    throw std::invalid_argument("write_scan_csv: inconsistent grid");
  }
  os << "# sequence=" << scan.sequence << " model=" << scan.model
     << " prep=" << scan.prep << " convention=" << scan.convention
     << " axes=" << detail::axes_token(scan) << "\n";
  os << "# generated=" << scan.generated << "\n";
  os << "# columns=xi,delta_over_omega,p0,epsilon\n";
  for (std::size_t i = 0; i < scan.xi_values.size(); ++i) {
    for (std::size_t j = 0; j < scan.delta_values.size(); ++j) {
      const std::size_t idx = scan.index(i, j);
      os << detail::fmt17(scan.xi_values[i]) << ','
         << detail::fmt17(scan.delta_values[j]) << ','
         << detail::fmt17(scan.p0[idx]) << ','
         << detail::fmt17(scan.epsilon[idx]) << "\n";
    }
  }
}

inline std::string scan_to_csv(const ScanResult &scan) {
  std::ostringstream os;
  write_scan_csv(os, scan);
  return os.str();
}

namespace detail {

inline double parse_double(const std::string &tok) {
  const char *begin = tok.c_str();
  char *end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || (end != nullptr && *end != '\0')) {
    throw std::runtime_error("scan parse: bad number '" + tok + "'");
  }
  return v;
}

inline std::vector<std::string> split(const std::string &line, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
}

// Extracts the point count from an axis descriptor like `xi[-1,1;41]`.
inline std::size_t axis_count(const std::string &descr) {
  const std::size_t semi = descr.rfind(';');
  const std::size_t close = descr.rfind(']');
  if (semi == std::string::npos || close == std::string::npos ||
      close <= semi) {
    throw std::runtime_error("scan parse: bad axis descriptor '" + descr +
                             "'");
  }
  return static_cast<std::size_t>(
      std::stoul(descr.substr(semi + 1, close - semi - 1)));
}

}  // namespace detail

// Inverse of write_scan_csv: reconstructs the ScanResult exactly, including
// the axis vectors (taken from the data rows, which carry full precision).
inline ScanResult read_scan_csv(std::istream &is) {
  ScanResult r;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::string line;
  bool header_seen = false;
  std::vector<std::array<double, 4>> rows;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (line[0] == '#') {
      for (const std::string &tok : detail::split(line.substr(1), ' ')) {
        const std::size_t eq = tok.find('=');
        if (eq == std::string::npos) {
          continue;
        }
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key == "sequence") {
          r.sequence = value;
        } else if (key == "model") {
          r.model = value;
        } else if (key == "prep") {
          r.prep = value;
        } else if (key == "convention") {
          r.convention = value;
        } else if (key == "generated") {
          r.generated = value;
        } else if (key == "axes") {
          const std::vector<std::string> parts = detail::split(value, ',');
          // The descriptors themselves contain one comma each, so the token
          // splits into four pieces; counts live in the bracketed tails.
          if (parts.size() != 4) {
            throw std::runtime_error("scan parse: bad axes token");
          }
          nx = detail::axis_count(parts[1]);
          ny = detail::axis_count(parts[3]);
          header_seen = true;
        }
      }
      continue;
    }
    const std::vector<std::string> cols = detail::split(line, ',');
    if (cols.size() != 4) {
      throw std::runtime_error("scan parse: expected 4 columns");
    }
    rows.push_back({detail::parse_double(cols[0]),
                    detail::parse_double(cols[1]),
                    detail::parse_double(cols[2]),
                    detail::parse_double(cols[3])});
  }
  if (!header_seen) {
    throw std::runtime_error("scan parse: missing header row");
  }
  if (rows.size() != nx * ny) {
    throw std::runtime_error("scan parse: row count does not match axes");
  }
  r.xi_values.resize(nx);
  r.delta_values.resize(ny);
  r.p0.resize(rows.size());
  r.epsilon.resize(rows.size());
  for (std::size_t i = 0; i < nx; ++i) {
    r.xi_values[i] = rows[i * ny][0];
  }
  for (std::size_t j = 0; j < ny; ++j) {
    r.delta_values[j] = rows[j][1];
  }
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    r.p0[idx] = rows[idx][2];
    r.epsilon[idx] = rows[idx][3];
  }
  return r;
}

inline ScanResult scan_from_csv(const std::string &text) {
  std::istringstream is(text);
  return read_scan_csv(is);
}

namespace detail {

inline void write_json_array(std::ostream &os, const std::vector<double> &v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) {
      os << ',';
    }
    os << fmt17(v[i]);
  }
  os << ']';
}

}  // namespace detail

// JSON mirror of the CSV contents: same metadata, axis vectors, and
// row-major p0/epsilon arrays.
inline void write_scan_json(std::ostream &os, const ScanResult &scan) {
  os << "{\n";
  os << "  \"sequence\": \"" << detail::json_escape(scan.sequence) << "\",\n";
  os << "  \"model\": \"" << detail::json_escape(scan.model) << "\",\n";
  os << "  \"prep\": \"" << detail::json_escape(scan.prep) << "\",\n";
  os << "  \"convention\": \"" << detail::json_escape(scan.convention)
     << "\",\n";
  os << "  \"generated\": \"" << detail::json_escape(scan.generated)
     << "\",\n";
  os << "  \"xi\": ";
  detail::write_json_array(os, scan.xi_values);
  os << ",\n  \"delta_over_omega\": ";
  detail::write_json_array(os, scan.delta_values);
  os << ",\n  \"p0\": ";
  detail::write_json_array(os, scan.p0);
  os << ",\n  \"epsilon\": ";
  detail::write_json_array(os, scan.epsilon);
  os << "\n}\n";
}

inline std::string scan_to_json(const ScanResult &scan) {
  std::ostringstream os;
  write_scan_json(os, scan);
  return os.str();
}

}  // namespace topodd
