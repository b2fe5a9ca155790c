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

#ifndef CENTEREDKIT_FUNCTION_HPP_
#define CENTEREDKIT_FUNCTION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "centeredkit/limits.hpp"
#include "centeredkit/setalgebra.hpp"

namespace centeredkit {

/// A total function between finite universes, stored as its value table.
class FiniteFunction {
 public:
  /// Throws InputError if the table length is not domain.size() or an entry
  /// is outside the codomain.
  FiniteFunction(Universe domain, Universe codomain, std::vector<std::size_t> values);

  static FiniteFunction identity(Universe u);
  static FiniteFunction constant(Universe domain, Universe codomain, std::size_t value);

  Universe domain() const noexcept { return domain_; }
  Universe codomain() const noexcept { return codomain_; }
  std::span<const std::uint8_t> values() const noexcept { return values_; }
  std::size_t operator()(std::size_t x) const { return values_.at(x); }

  SubsetMask image(SubsetMask a) const;
  SubsetMask preimage(SubsetMask b) const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;
  /// Lexicographic on value tables for functions between the same universes.
  friend std::strong_ordering operator<=>(const FiniteFunction& a, const FiniteFunction& b) {
    if (auto c = a.domain_.size() <=> b.domain_.size(); c != 0) return c;
    if (auto c = a.codomain_.size() <=> b.codomain_.size(); c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  Universe domain_;
  Universe codomain_;
  std::vector<std::uint8_t> values_;
};

/// "[0, 1, 0]"
std::string to_string(const FiniteFunction& f);

/// outer after inner. Throws InputError unless inner's codomain is outer's
/// domain.
FiniteFunction compose(const FiniteFunction& outer, const FiniteFunction& inner);

/// |codomain|^|domain|, saturating at UINT64_MAX.
std::uint64_t function_count(Universe domain, Universe codomain) noexcept;

/// Every function domain -> codomain, lexicographic on value tables (index 0
/// is the most significant position). Throws CapExceeded if there are more
/// than `cap` of them.
std::vector<FiniteFunction> all_functions(Universe domain, Universe codomain,
                                          std::uint64_t cap);

}  // namespace centeredkit

#endif  // CENTEREDKIT_FUNCTION_HPP_
