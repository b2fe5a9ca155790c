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

// Text documents for spaces, collections, sequences and cones.
//
//   space:       {"points": 3, "nu": {"0": [[0], [0, 1]], "1": [[1]], "2": []}}
//   collection:  {"points": 3, "collection": [[0, 1], [1, 2], [0, 1, 2]]}
//   sequence:    {"prefix": [2], "cycle": [0, 1]}
//   cone:        {"points": 2, "legs": [{"space": <space>, "map": [0, 0]}]}
//
// Only nonnegative integers are accepted as points. Subsets and collections
// are canonicalized on read (points ascending, subsets ascending by bit
// pattern, duplicates dropped), and serialize() writes the canonical layout,
// so serialize(parse(t)) == t for every canonical t.

#ifndef CENTEREDKIT_IO_HPP_
#define CENTEREDKIT_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "centeredkit/categories.hpp"
#include "centeredkit/function.hpp"
#include "centeredkit/setalgebra.hpp"
#include "centeredkit/spaces.hpp"

namespace centeredkit {

struct CollectionDocument {
  Universe universe;
  SubsetCollection collection;

  friend bool operator==(const CollectionDocument&, const CollectionDocument&) = default;
};

using Document = std::variant<CenteredSpace, CollectionDocument>;

/// All parsers throw ParseError for malformed text (with line and column)
/// and InputError for well-formed text that does not describe a valid
/// object (with a path to the offending value).
CenteredSpace parse_space(std::string_view text);
CollectionDocument parse_collection(std::string_view text);
EventuallyPeriodicSequence parse_sequence(std::string_view text);
Cone parse_cone(std::string_view text);
/// A space or a collection, told apart by the "nu" / "collection" key.
Document parse_document(std::string_view text);

std::string serialize(const CenteredSpace& s);
std::string serialize(const CollectionDocument& doc);
std::string serialize(const Document& doc);
std::string serialize(const EventuallyPeriodicSequence& seq);

/// Inline JSON fragments: "[0, 2]", "[[0], [0, 1]]", "[1, 0, 1]".
std::string to_json(SubsetMask a);
std::string to_json(const SubsetCollection& p);
std::string to_json(const FiniteFunction& f);

/// Whole file as text. Throws InputError if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace centeredkit

#endif  // CENTEREDKIT_IO_HPP_
