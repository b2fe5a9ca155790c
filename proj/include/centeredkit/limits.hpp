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

#ifndef CENTEREDKIT_LIMITS_HPP_
#define CENTEREDKIT_LIMITS_HPP_

#include <cstddef>

namespace centeredkit {

/// Caps on the exhaustive enumerations. Every enumerating operation takes a
/// Limits and refuses with CapExceeded instead of silently running for hours.
struct Limits {
  /// Largest universe whose full collection space 2^(2^n) may be walked.
  static constexpr std::size_t kHardEnumPoints = 5;
  /// Largest function space |Y|^|X| for the O(k^3) relation analysis.
  static constexpr std::size_t kHardFunctions = 1024;
  /// Largest universe for probe-space enumeration in the categorical checks.
  static constexpr std::size_t kHardProbePoints = 3;

  std::size_t max_enum_points = 4;
  std::size_t max_functions = 256;
  std::size_t max_probe_points = 3;

  /// Defaults, with max_enum_points taken from CENTEREDKIT_MAX_ENUM when set.
  /// Throws InputError on a non-numeric value and CapExceeded above the hard
  /// limit.
  static Limits from_environment();

  /// Throws CapExceeded if any field is above its hard limit.
  void check() const;
};

}  // namespace centeredkit

#endif  // CENTEREDKIT_LIMITS_HPP_
