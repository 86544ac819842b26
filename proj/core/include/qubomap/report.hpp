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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qubomap/pipeline.hpp"

namespace qubomap {

/// Report JSON. Wall time is only written when `with_timing` is set so that
/// identical runs produce byte-identical documents.
std::string report_to_json(const MappingReport& report, bool with_timing = false);

/// Columns shared by `map --csv` and `sweep`.
std::string csv_header();

struct RunLabel {
  std::string family = "circuit";
  std::size_t depth = 0;
  std::string topology;
  std::uint64_t seed = 0;
};

std::string csv_row(const RunLabel& label, const MappingReport& report);
/// Row for a run that raised before producing a report.
std::string csv_error_row(const RunLabel& label, std::size_t n, std::string_view error_kind);

/// Static timeline: slices left to right, cores top to bottom, qubits that
/// arrived by transfer drawn in red.
std::string timeline_svg(const MappingReport& report);

}  // namespace qubomap
