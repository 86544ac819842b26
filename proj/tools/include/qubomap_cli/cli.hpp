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

#include <iosfwd>
#include <string>
#include <vector>

namespace qubomap::cli {

/// Exit statuses of the `qubomap` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // map finished but the mapping is invalid
inline constexpr int kExitError = 2;    // bad input, I/O failure, pipeline error

/**
 * Runs `qubomap <gen|map|sweep> ...` with args excluding the program name.
 *
 * Primary output (report JSON, circuit JSON, CSV) goes to `out` unless an
 * output file is given; errors are written to `err` as a one-line JSON object
 * `{"error": <kind>, "message": <text>}`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qubomap::cli
