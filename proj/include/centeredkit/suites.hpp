//  Copyright 2026 The centeredkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Exhaustive verification suites over small universes. Each suite walks a
// whole finite search space and records every case where the library
// disagrees with the stated property; a failure entry is a self-contained
// JSON object that can be fed back to the corresponding library predicate.

#ifndef CENTEREDKIT_SUITES_HPP_
#define CENTEREDKIT_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centeredkit/limits.hpp"

namespace centeredkit {

struct SuiteOptions {
  /// Suite-specific default when unset.
  std::optional<std::size_t> max_points;
  std::optional<std::size_t> max_colors;
  Limits limits;
};

struct SuiteReport {
  std::string suite;
  std::size_t max_points = 0;
  std::size_t max_colors = 0;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
  /// Free-form facts about the run (witnesses found, counts per size).
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

std::vector<std::string_view> suite_names();

/// Throws InputError for an unknown suite or unusable options and
/// CapExceeded when the options exceed the limits.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

/// Deterministic renderings; wall time is left out so that identical flags
/// give identical bytes.
std::string render_text(const SuiteReport& report);
std::string render_json(const SuiteReport& report);

}  // namespace centeredkit

#endif  // CENTEREDKIT_SUITES_HPP_
