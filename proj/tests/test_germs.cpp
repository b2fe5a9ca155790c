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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "centeredkit/error.hpp"
#include "centeredkit/germs.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace centeredkit;

namespace {

// nu(0) = {{0,1}, {0,1,2}}, nu(1) = {{1}}, nu(2) = {{0,1,2}}
CenteredSpace sample() {
  const Universe u(3);
  return CenteredSpace(u, {SubsetCollection::of({{0, 1}, {0, 1, 2}}), SubsetCollection::of({{1}}),
                           SubsetCollection::of({{0, 1, 2}})});
}

bool constant_on(const FiniteFunction& f, SubsetMask n) {
  const auto pts = n.points();
  for (auto p : pts) {
    if (f(p) != f(pts.front())) return false;
  }
  return true;
}

SubsetMask coincidence(const FiniteFunction& f, const FiniteFunction& g) {
  std::uint32_t bits = 0;
  for (std::size_t x = 0; x < f.values().size(); ++x) {
    if (f(x) == g(x)) bits |= 1u << x;
  }
  return SubsetMask(bits);
}

}  // namespace

TEST_CASE("centered-at functions into a discrete target") {
  const auto s = sample();
  const Universe y(2);
  const auto fs = centered_at_functions(s, 0, CenteredSpace::discrete(y));
  std::size_t expected = 0;
  for (const auto& f : all_functions(Universe(3), y, 64)) {
    bool some = false;
    for (auto n : s.nu(0)) some = some || constant_on(f, n);
    if (some) ++expected;
  }
  CHECK(fs.size() == expected);
  CHECK(fs.size() == 4);
}

TEST_CASE("germ partition") {
  const auto s = sample();
  const Universe y(2);
  const auto target = CenteredSpace::discrete(y);
  const auto fs = centered_at_functions(s, 0, target);
  const auto classes = germ_partition(s, 0, target);
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.size();
    for (const auto& f : c) {
      for (const auto& g : c) {
        bool agree = false;
        for (auto n : s.nu(0)) agree = agree || n.subset_of(coincidence(f, g));
        CHECK(agree);
      }
    }
  }
  CHECK(total == fs.size());
  CHECK(classes.size() == 2);
  CHECK(germ_class(s, 0, fs.front(), y) == classes.front());
}

TEST_CASE("germs are refused") {
  const Universe u(3), y(2);
  const CenteredSpace raster(u, {SubsetCollection::of({{0, 1}, {0, 2}, {0, 1, 2}}),
                                 SubsetCollection::of({{1}}), SubsetCollection::of({{2}})});
  const FiniteFunction c0 = FiniteFunction::constant(u, y, 0);
  CHECK_THROWS_AS(germ_class(raster, 0, c0, y), InputError);
  CHECK_THROWS_AS(germ_class(sample(), 0, FiniteFunction(u, y, {0, 1, 0}), y), InputError);
  CHECK_THROWS_AS(germ_class(sample(), 0, FiniteFunction::constant(u, Universe(1), 0),
                             Universe(1)),
                  InputError);
}
