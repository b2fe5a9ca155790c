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

#include "centeredkit/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "centeredkit/error.hpp"

namespace centeredkit {

Limits Limits::from_environment() {
  Limits limits;
  const char* raw = std::getenv("CENTEREDKIT_MAX_ENUM");
  if (raw == nullptr || *raw == '\0') return limits;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InputError("CENTEREDKIT_MAX_ENUM is not a nonnegative integer: '" +
                     std::string(text) + "'");
  }
  limits.max_enum_points = value;
  limits.check();
  return limits;
}

void Limits::check() const {
  if (max_enum_points > kHardEnumPoints) {
    throw CapExceeded("enumeration cap of " + std::to_string(max_enum_points) +
                      " points is above the hard limit of " +
                      std::to_string(kHardEnumPoints));
  }
  if (max_functions > kHardFunctions) {
    throw CapExceeded("function-space cap of " + std::to_string(max_functions) +
                      " is above the hard limit of " +
                      std::to_string(kHardFunctions));
  }
  if (max_probe_points > kHardProbePoints) {
    throw CapExceeded("probe cap of " + std::to_string(max_probe_points) +
                      " points is above the hard limit of " +
                      std::to_string(kHardProbePoints));
  }
}

}  // namespace centeredkit
