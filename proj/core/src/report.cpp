// Copyright 2026 The qubomap Authors
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

#include "qubomap/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qubomap {

namespace {

long long core_or_minus_one(Core c) { return c == kNoCore ? -1 : static_cast<long long>(c); }

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string general(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

// RFC 4180 quoting; topology specs such as grid:2,2,4 contain commas.
std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string quoted = "\"";
  for (const char ch : text) {
    if (ch == '"') {
      quoted += '"';
    }
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

std::string report_to_json(const MappingReport& report, bool with_timing) {
  nlohmann::ordered_json doc;
  doc["valid"] = report.valid;
  doc["n"] = report.n;
  doc["T"] = report.num_slices;
  doc["k"] = report.num_cores;
  doc["lambda"] = report.lambda;
  doc["energy"] = report.energy;
  doc["M"] = report.weighted_transfers;
  doc["transfer_count"] = report.transfer_count;
  if (with_timing) {
    doc["wall_time_s"] = report.wall_time_s;
  }
  doc["two_qubit_gates"] = report.two_qubit_gates;
  doc["relative_M"] = report.relative_transfers;
  doc["assignment_penalty"] = report.assignment_penalty;
  doc["solver"] = report.solver;
  doc["windows"] = report.windows;
  doc["dropped_duplicates"] = report.dropped_duplicates;
  doc["gates_per_slice"] = report.gates_per_slice;

  auto assignment = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < report.num_slices; ++t) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < report.n; ++i) {
      row.push_back(core_or_minus_one(report.assignment[t * report.n + i]));
    }
    assignment.push_back(std::move(row));
  }
  doc["assignment"] = std::move(assignment);

  auto moves = nlohmann::ordered_json::array();
  for (const auto& e : report.transfers) {
    moves.push_back({{"t", e.from_slice + 1},
                     {"qubit", e.qubit},
                     {"from", e.from_core},
                     {"to", e.to_core},
                     {"hops", e.hops}});
  }
  doc["transfers"] = std::move(moves);
  doc["loads"] = report.loads;
  doc["problems"] = report.problems;
  return doc.dump(2) + "\n";
}

std::string csv_header() {
  return "family,n,depth,two_qubit_gates,topology,lambda,seed,status,valid,T,M,transfer_count,"
         "relative_M,energy,wall_time_s\n";
}

std::string csv_row(const RunLabel& label, const MappingReport& report) {
  std::ostringstream row;
  row << csv_field(label.family) << ',' << report.n << ',' << label.depth << ',' << report.two_qubit_gates
      << ',' << csv_field(label.topology) << ',' << general(report.lambda) << ',' << label.seed << ",ok,"
      << (report.valid ? "true" : "false") << ',' << report.num_slices << ','
      << report.weighted_transfers << ',' << report.transfer_count << ','
      << fixed(report.relative_transfers, 6) << ',' << general(report.energy) << ','
      << fixed(report.wall_time_s, 3) << '\n';
  return row.str();
}

std::string csv_error_row(const RunLabel& label, std::size_t n, std::string_view error_kind) {
  std::ostringstream row;
  row << csv_field(label.family) << ',' << n << ',' << label.depth << ",," << csv_field(label.topology) << ",,"
      << label.seed << ",error:" << error_kind << ",false,,,,,,\n";
  return row.str();
}

std::string timeline_svg(const MappingReport& report) {
  constexpr int kMargin = 50;
  constexpr int kColumn = 70;
  constexpr int kSlot = 22;
  const std::size_t k = report.num_cores;
  const std::size_t T = report.num_slices;
  std::size_t max_load = 1;
  for (const auto& row : report.loads) {
    for (const auto load : row) {
      max_load = std::max(max_load, load);
    }
  }
  const int row_height = static_cast<int>(max_load) * kSlot + 10;
  const int width = kMargin + static_cast<int>(T) * kColumn + 10;
  const int height = kMargin + static_cast<int>(k) * row_height + 10;

  std::set<std::pair<std::size_t, std::size_t>> arrived;  // (slice, qubit)
  for (const auto& e : report.transfers) {
    arrived.emplace(e.from_slice + 1, e.qubit);
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t t = 0; t < T; ++t) {
    svg << "<text x=\"" << kMargin + static_cast<int>(t) * kColumn + kColumn / 2 << "\" y=\""
        << kMargin - 20 << "\" text-anchor=\"middle\">t" << t + 1 << "</text>\n";
  }
  for (std::size_t j = 0; j < k; ++j) {
    const int top = kMargin + static_cast<int>(j) * row_height;
    svg << "<text x=\"5\" y=\"" << top + row_height / 2 << "\">core " << j << "</text>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << top << "\" x2=\"" << width - 10
        << "\" y2=\"" << top << "\" stroke=\"#ccc\"/>\n";
    for (std::size_t t = 0; t < T; ++t) {
      int slot = 0;
      for (std::size_t i = 0; i < report.n; ++i) {
        if (report.assignment[t * report.n + i] != j) {
          continue;
        }
        const int cx = kMargin + static_cast<int>(t) * kColumn + kColumn / 2;
        const int cy = top + 5 + slot * kSlot + kSlot / 2;
        const bool moved = arrived.count({t, i}) != 0;
        svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"9\" fill=\""
            << (moved ? "#d62728" : "#9ecae1") << "\" stroke=\"#333\"/>"
            << "<text x=\"" << cx << "\" y=\"" << cy + 4 << "\" text-anchor=\"middle\">" << i
            << "</text>\n";
        ++slot;
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qubomap
