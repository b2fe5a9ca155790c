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

#include "centeredkit/function.hpp"

#include <limits>
#include <utility>

#include "centeredkit/error.hpp"

namespace centeredkit {

FiniteFunction::FiniteFunction(Universe domain, Universe codomain,
                               std::vector<std::size_t> values)
    : domain_(domain), codomain_(codomain) {
  if (values.size() != domain.size()) {
    throw InputError("function table has " + std::to_string(values.size()) +
                     " entries for a domain of " + std::to_string(domain.size()) +
                     " points");
  }
  values_.reserve(values.size());
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (!codomain.contains_point(values[x])) {
      throw InputError("function value " + std::to_string(values[x]) + " at point " +
                       std::to_string(x) + " is outside a codomain of " +
                       std::to_string(codomain.size()) + " points");
    }
    values_.push_back(static_cast<std::uint8_t>(values[x]));
  }
}

FiniteFunction FiniteFunction::identity(Universe u) {
  std::vector<std::size_t> values(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) values[x] = x;
  return FiniteFunction(u, u, std::move(values));
}

FiniteFunction FiniteFunction::constant(Universe domain, Universe codomain,
                                        std::size_t value) {
  return FiniteFunction(domain, codomain, std::vector<std::size_t>(domain.size(), value));
}

SubsetMask FiniteFunction::image(SubsetMask a) const {
  SubsetMask out;
  for (std::size_t x : a.points()) {
    if (x >= values_.size()) {
      throw InputError("subset " + to_string(a) + " is outside the function's domain");
    }
    out = out | SubsetMask::singleton(values_[x]);
  }
  return out;
}

SubsetMask FiniteFunction::preimage(SubsetMask b) const {
  SubsetMask out;
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (b.contains(values_[x])) out = out | SubsetMask::singleton(x);
  }
  return out;
}

std::string to_string(const FiniteFunction& f) {
  std::string out = "[";
  for (std::size_t x = 0; x < f.values().size(); ++x) {
    if (x != 0) out += ", ";
    out += std::to_string(f.values()[x]);
  }
  return out + "]";
}

FiniteFunction compose(const FiniteFunction& outer, const FiniteFunction& inner) {
  if (!(inner.codomain() == outer.domain())) {
    throw InputError("cannot compose: codomain of the inner map has " +
                     std::to_string(inner.codomain().size()) +
                     " points, domain of the outer map has " +
                     std::to_string(outer.domain().size()));
  }
  std::vector<std::size_t> values(inner.domain().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = outer(inner(x));
  return FiniteFunction(inner.domain(), outer.codomain(), std::move(values));
}

std::uint64_t function_count(Universe domain, Universe codomain) noexcept {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / codomain.size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= codomain.size();
  }
  return total;
}

std::vector<FiniteFunction> all_functions(Universe domain, Universe codomain,
                                          std::uint64_t cap) {
  const std::uint64_t total = function_count(domain, codomain);
  if (total > cap) {
    throw CapExceeded("function space of " + std::to_string(codomain.size()) + "^" +
                      std::to_string(domain.size()) + " functions exceeds the cap of " +
                      std::to_string(cap));
  }
  std::vector<FiniteFunction> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> table(domain.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.emplace_back(domain, codomain, table);
    for (std::size_t pos = domain.size(); pos-- > 0;) {
      if (++table[pos] < codomain.size()) break;
      table[pos] = 0;
    }
  }
  return out;
}

}  // namespace centeredkit
