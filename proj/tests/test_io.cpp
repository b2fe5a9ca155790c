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

#include <string>

#include "centeredkit/error.hpp"
#include "centeredkit/io.hpp"
#include "centeredkit/spaces.hpp"
#include "doctest.h"

using namespace centeredkit;

namespace {

std::string data(const std::string& name) {
  return read_text_file(std::string(CENTEREDKIT_TEST_DATA) + "/" + name);
}

}  // namespace

TEST_CASE("canonical documents round-trip") {
  for (const char* name : {"raster_example.json", "discrete_top2.json", "mixed3.json",
                           "filterbase3.json", "empty_collection.json"}) {
    CAPTURE(name);
    const auto text = data(name);
    CHECK(serialize(parse_document(text)) == text);
  }
  const auto seq = data("sequence_cycle.json");
  CHECK(serialize(parse_sequence(seq)) == seq);
}

TEST_CASE("parsing canonicalizes") {
  const auto doc = parse_collection(R"({"points": 3, "collection": [[2, 1], [0], [1, 2]]})");
  CHECK(doc.collection == SubsetCollection::of({{0}, {1, 2}}));
  CHECK(serialize(doc) == "{\n  \"points\": 3,\n  \"collection\": [[0], [1, 2]]\n}\n");
  const auto s = parse_space(R"({"points": 1, "nu": {"0": [[0], [0]]}})");
  CHECK(s.nu(0).size() == 1);
}

TEST_CASE("malformed text reports a position") {
  try {
    parse_document(data("bad_syntax.json"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_document(data("bad_index.json")), InputError);
  CHECK_THROWS_AS(parse_document(data("unknown_key.json")), InputError);
  CHECK_THROWS_AS(parse_collection(R"({"points": 2, "collection": [[-1]]})"), InputError);
  CHECK_THROWS_AS(parse_collection(R"({"points": 2, "collection": [[0.5]]})"), InputError);
  CHECK_THROWS_AS(parse_space(R"({"points": 2, "nu": {"0": [[0]]}})"), InputError);
  CHECK_THROWS_AS(parse_space(R"({"points": 1, "nu": {"00": [[0]]}})"), InputError);
  CHECK_THROWS_AS(parse_sequence(R"({"prefix": [], "cycle": []})"), InputError);
  // Uncentered structures parse so that they can be reported on.
  const auto bad = parse_space(data("uncentered.json"));
  CHECK(find_centering_violation(bad).has_value());
}

TEST_CASE("cones") {
  const auto cone = parse_cone(data("empty_cone.json"));
  CHECK(cone.apex().size() == 2);
  CHECK(cone.legs().empty());
  const auto one = parse_cone(
      R"({"points": 2, "legs": [{"space": {"points": 1, "nu": {"0": [[0]]}}, "map": [0, 0]}]})");
  CHECK(one.legs().size() == 1);
  CHECK_THROWS_AS(parse_cone(R"({"points": 2, "legs": [{"space": {"points": 1, "nu": {"0": [[0]]}}, "map": [0, 1]}]})"),
                  InputError);
}

TEST_CASE("inline fragments") {
  CHECK(to_json(SubsetMask::of({0, 2})) == "[0, 2]");
  CHECK(to_json(SubsetCollection::of({{0}, {0, 1}})) == "[[0], [0, 1]]");
  CHECK(to_json(FiniteFunction(Universe(3), Universe(2), {1, 0, 1})) == "[1, 0, 1]");
  CHECK_THROWS_AS(read_text_file("/nonexistent/centeredkit.json"), InputError);
}
