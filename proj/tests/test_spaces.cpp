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

#include <set>
#include <vector>

#include "centeredkit/error.hpp"
#include "centeredkit/spaces.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace centeredkit;

namespace {

std::vector<oracle::Family> as_families(const CenteredSpace& s) {
  std::vector<oracle::Family> out;
  for (const auto& p : s.structure()) out.push_back(oracle::to_family(p));
  return out;
}

}  // namespace

TEST_CASE("factories and validation") {
  const Universe u(3);
  CHECK(validate_space(CenteredSpace::discrete(u)));
  CHECK(validate_space(CenteredSpace::indiscrete(u)));
  const CenteredSpace bad(Universe(2), {SubsetCollection::of({{1}}), SubsetCollection::of({{1}})});
  const auto violation = find_centering_violation(bad);
  REQUIRE(violation.has_value());
  CHECK(violation->point == 0);
  CHECK(violation->set == SubsetMask::of({1}));
  CHECK_THROWS_AS(require_valid_space(bad), InputError);
  CHECK_THROWS_AS(CenteredSpace(u, {SubsetCollection{}}), InputError);
}

TEST_CASE("classification") {
  const Universe u(3);
  CHECK(classify_space(CenteredSpace::discrete_topology(u)).most_specific == SpaceClass::Top);
  CHECK(classify_space(CenteredSpace::indiscrete(u)).most_specific == SpaceClass::Top);
  const auto d = classify_space(CenteredSpace::discrete(u));
  CHECK(d.most_specific == SpaceClass::Filterbase);
  CHECK_FALSE(d.raster);
  const CenteredSpace with_empty(Universe(2), {SubsetCollection{}, SubsetCollection::of({{1}})});
  CHECK(classify_space(with_empty).most_specific == SpaceClass::Centered);
  CHECK_FALSE(belongs_to(with_empty, SpaceClass::Filterbase));
  CHECK(parse_space_class("pretop") == SpaceClass::PreTop);
  CHECK_FALSE(parse_space_class("sober").has_value());
}

TEST_CASE("transport and centered maps") {
  const Universe x(3), y(2);
  const FiniteFunction f(x, y, {0, 0, 1});
  CHECK(transport(f, SubsetCollection::of({{0, 1}, {2}})) == SubsetCollection::of({{0}, {1}}));
  CHECK(is_centered(f, CenteredSpace::discrete(x), CenteredSpace::discrete(y)));
  CHECK_FALSE(is_centered(FiniteFunction::identity(x), CenteredSpace::indiscrete(x),
                          CenteredSpace::discrete(x)));
  CHECK(first_uncentered_point(FiniteFunction::identity(x), CenteredSpace::indiscrete(x),
                               CenteredSpace::discrete(x)) == 0);
  CHECK_THROWS_AS(is_centered(f, CenteredSpace::discrete(y), CenteredSpace::discrete(y)),
                  InputError);
}

TEST_CASE("topological spaces are exactly the neighborhood systems of topologies") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Universe u(n);
    const int ni = static_cast<int>(n);
    std::set<std::vector<oracle::Family>> from_topologies;
    for (const auto& t : oracle::topologies(ni)) {
      std::vector<oracle::Family> sys;
      for (int x = 0; x < ni; ++x) sys.push_back(oracle::neighborhoods(t, ni, x));
      from_topologies.insert(sys);
    }
    std::size_t top_count = 0;
    for (const auto& s : enumerate_spaces(u, SpaceClass::PreTop)) {
      const bool expected = from_topologies.count(as_families(s)) > 0;
      CHECK(is_topological(s) == expected);
      CHECK(belongs_to(s, SpaceClass::Top) == expected);
      if (expected) ++top_count;
    }
    CHECK(top_count == from_topologies.size());
  }
  CHECK_THROWS_AS(is_topological(CenteredSpace::discrete(Universe(2))), InputError);
}

TEST_CASE("open sets") {
  const Universe u(2);
  const CenteredSpace sierpinski(u, {SubsetCollection::of({{0}, {0, 1}}),
                                     SubsetCollection::of({{0, 1}})});
  CHECK(open_sets(sierpinski) == SubsetCollection::of({{}, {0}, {0, 1}}));
  CHECK(neighborhood_space(u, open_sets(sierpinski)) == sierpinski);
}

TEST_CASE("sequences") {
  const EventuallyPeriodicSequence s({2}, {0, 1});
  CHECK(s.at(0) == 2);
  CHECK(s.at(1) == 0);
  CHECK(s.at(4) == 1);
  CHECK(s.cycle_set() == SubsetMask::of({0, 1}));
  CHECK_THROWS_AS(EventuallyPeriodicSequence({0}, {}), InputError);
  CHECK_THROWS_AS(s.require_valid_in(Universe(2)), InputError);
}

TEST_CASE("convergence matches the tail oracle") {
  const Universe u(3);
  const CenteredSpace discrete = CenteredSpace::discrete(u);
  CHECK_FALSE(converges(discrete, EventuallyPeriodicSequence({}, {0, 1}), 0));
  CHECK(converges(discrete, EventuallyPeriodicSequence({1, 2}, {0}), 0));

  const std::vector<std::vector<std::size_t>> shapes{{}, {2}, {0, 1}, {1, 1, 2}};
  const std::vector<std::vector<std::size_t>> cycles{{0}, {1}, {0, 1}, {2, 0}, {0, 1, 2}};
  for (const auto& s : enumerate_spaces(Universe(2), SpaceClass::Centered)) {
    for (std::size_t x = 0; x < 2; ++x) {
      const oracle::Family fam = as_families(s)[x];
      const std::vector<oracle::Set> nu(fam.begin(), fam.end());
      for (const auto& p : shapes) {
        for (const auto& c : cycles) {
          bool fits = true;
          for (auto v : p) fits = fits && v < 2;
          for (auto v : c) fits = fits && v < 2;
          if (!fits) continue;
          const EventuallyPeriodicSequence seq(p, c);
          const std::vector<int> pi(p.begin(), p.end()), ci(c.begin(), c.end());
          CHECK(converges(s, seq, x) == oracle::converges_by_tails(nu, pi, ci));
        }
      }
    }
  }
}

TEST_CASE("constant sequences converge in valid spaces and can fail otherwise") {
  for (const auto& s : enumerate_spaces(Universe(2), SpaceClass::Centered)) {
    for (std::size_t x = 0; x < 2; ++x) {
      CHECK(converges(s, EventuallyPeriodicSequence::constant(x), x));
    }
  }
  const CenteredSpace bad(Universe(2), {SubsetCollection::of({{1}}), SubsetCollection::of({{1}})});
  CHECK_FALSE(converges(bad, EventuallyPeriodicSequence::constant(0), 0));
}

TEST_CASE("space enumeration") {
  // Collections of subsets containing a point of a 2-point universe: 2
  // subsets give 4 collections (empty included), so 16 structures.
  CHECK(enumerate_spaces(Universe(2), SpaceClass::Centered).size() == 16);
  for (const auto c : kAllSpaceClasses) {
    for (const auto& s : enumerate_spaces(Universe(2), c)) CHECK(belongs_to(s, c));
  }
  CHECK_THROWS_AS(enumerate_spaces(Universe(4), SpaceClass::Top), CapExceeded);
}
