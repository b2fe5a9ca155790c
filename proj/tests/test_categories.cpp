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

#include <vector>

#include "centeredkit/categories.hpp"
#include "centeredkit/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace centeredkit;

namespace {

std::vector<CenteredSpace> probes(SpaceClass c) {
  std::vector<CenteredSpace> out;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (auto& s : enumerate_spaces(Universe(n), c)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("initial structure of a single leg is the preimage system") {
  const Universe apex(3), y(2);
  const CenteredSpace target(y, {SubsetCollection::of({{0}}), SubsetCollection::of({{0, 1}})});
  const FiniteFunction f(apex, y, {0, 0, 1});
  const Cone cone(apex, {ConeLeg{target, f}});
  const auto s = initial_structure(cone, SpaceClass::Centered);
  CHECK(s.nu(0) == SubsetCollection::of({{0, 1}}));
  CHECK(s.nu(2) == SubsetCollection::of({{0, 1, 2}}));
  const auto r = initial_structure(Cone(apex, {ConeLeg{reflect(target, SpaceClass::Centered,
                                                               SpaceClass::Raster),
                                                       f}}),
                                   SpaceClass::Raster);
  CHECK(oracle::to_family(r.nu(0)) ==
        oracle::up(oracle::Family{oracle::Set{0, 1}}, 3));
}

TEST_CASE("initial structures verify in every category") {
  const Universe apex(2);
  for (const auto c : kAllSpaceClasses) {
    const auto ps = probes(c);
    for (const auto& t : enumerate_spaces(Universe(2), c)) {
      for (const auto& f : all_functions(apex, Universe(2), 16)) {
        const Cone cone(apex, {ConeLeg{t, f}});
        const auto s = initial_structure(cone, c);
        CHECK(verify_initial(cone, s, c, ps).passed);
        if (const auto finer = refine_with_singleton(s, c)) {
          CHECK_FALSE(verify_initial(cone, *finer, c, ps).passed);
        }
      }
    }
  }
}

TEST_CASE("empty cones") {
  const Cone cone(Universe(2), {});
  CHECK(initial_structure(cone, SpaceClass::PreTop) == CenteredSpace::indiscrete(Universe(2)));
  CHECK(initial_structure(cone, SpaceClass::Centered).nu(0).empty());
}

TEST_CASE("cones are validated") {
  const FiniteFunction f(Universe(2), Universe(3), {0, 2});
  CHECK_THROWS_AS(Cone(Universe(2), {ConeLeg{CenteredSpace::discrete(Universe(2)), f}}),
                  InputError);
  const Cone cone(Universe(2), {ConeLeg{CenteredSpace::discrete(Universe(3)), f}});
  CHECK_THROWS_AS(initial_structure(cone, SpaceClass::Raster), InputError);
}

TEST_CASE("reflections and coreflections") {
  const std::vector<std::pair<SpaceClass, SpaceClass>> up{
      {SpaceClass::PreTop, SpaceClass::Top},
      {SpaceClass::Filterbase, SpaceClass::PreTop},
      {SpaceClass::Centered, SpaceClass::Raster}};
  for (const auto& [from, into] : up) {
    CHECK(supports_reflection(from, into));
    const auto ps = probes(into);
    for (const auto& s : enumerate_spaces(Universe(2), from)) {
      bool has_empty = false;
      for (const auto& p : s.structure()) has_empty = has_empty || p.empty();
      if (has_empty) {
        CHECK_THROWS_AS(reflect(s, from, into), InputError);
        continue;
      }
      CHECK(verify_reflection(s, reflect(s, from, into), into, ps).passed);
    }
  }
  const std::vector<std::pair<SpaceClass, SpaceClass>> down{
      {SpaceClass::Centered, SpaceClass::Filterbase},
      {SpaceClass::Raster, SpaceClass::PreTop},
      {SpaceClass::Filterbase, SpaceClass::PreTop},
      {SpaceClass::Centered, SpaceClass::Raster}};
  for (const auto& [from, into] : down) {
    CHECK(supports_coreflection(from, into));
    const auto ps = probes(into);
    for (const auto& s : enumerate_spaces(Universe(2), from)) {
      CHECK(verify_coreflection(s, coreflect(s, from, into), into, ps).passed);
    }
  }
  CHECK_FALSE(supports_reflection(SpaceClass::Top, SpaceClass::PreTop));
  CHECK_THROWS_AS(reflect(CenteredSpace::discrete(Universe(2)), SpaceClass::Raster,
                          SpaceClass::Top),
                  InputError);
}

TEST_CASE("a cap closure in place of the up closure is caught") {
  const Universe u(2);
  const CenteredSpace s(u, {SubsetCollection::of({{0}}), SubsetCollection::of({{0, 1}})});
  const CenteredSpace wrong = map_structure(s, [](std::size_t, const SubsetCollection& p) {
    return cap_closure(p);
  });
  CHECK_FALSE(verify_reflection(s, wrong, SpaceClass::Raster, probes(SpaceClass::Raster)).passed);
}

TEST_CASE("fiber preorder and amnestic representatives") {
  const Universe u(2);
  const CenteredSpace a(u, {SubsetCollection::of({{0}}), SubsetCollection::of({{1}})});
  const CenteredSpace b(u, {SubsetCollection::of({{0}}), SubsetCollection::of({{1}, {0, 1}})});
  CHECK(fiber_compare(a, b).equivalent());
  CHECK(is_fiber_isomorphism(a, b));
  CHECK_FALSE(a == b);
  CHECK(amnestic_representative(a, SpaceClass::PreTop) ==
        amnestic_representative(b, SpaceClass::PreTop));
  const auto r = amnestic_representative(a, SpaceClass::PreTop);
  CHECK(amnestic_representative(r, SpaceClass::PreTop) == r);
  CHECK(fiber_compare(a, CenteredSpace::indiscrete(u)) == FiberComparison{true, false});
  CHECK_THROWS_AS(fiber_compare(a, CenteredSpace::indiscrete(Universe(3))), InputError);
  const CenteredSpace empty(u, {SubsetCollection{}, SubsetCollection::of({{1}})});
  CHECK_THROWS_AS(amnestic_representative(empty, SpaceClass::Raster), InputError);
}

TEST_CASE("rasters and filters have no distinct equivalent structures") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto c : {SpaceClass::Raster, SpaceClass::PreTop}) {
      const auto spaces = enumerate_spaces(Universe(n), c);
      for (const auto& s : spaces) {
        for (const auto& t : spaces) {
          if (fiber_compare(s, t).equivalent()) CHECK(s == t);
        }
      }
    }
  }
}
