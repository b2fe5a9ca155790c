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

#include "centeredkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "centeredkit/error.hpp"
#include "json.hpp"

namespace centeredkit {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the last character read.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) known = known || it.key() == key;
    if (!known) bad(path, "unknown field \"" + it.key() + "\"");
  }
}

std::size_t natural(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) bad(path, "expected a nonnegative integer, got " + v.dump());
  return v.get<std::size_t>();
}

std::size_t point(const json& v, Universe u, const std::string& path) {
  const std::size_t x = natural(v, path);
  if (!u.contains_point(x)) {
    bad(path, "point " + std::to_string(x) + " is outside a universe of " +
                  std::to_string(u.size()) + " points");
  }
  return x;
}

std::vector<std::size_t> point_list(const json& v, Universe u, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of points");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(point(v[i], u, path + "/" + std::to_string(i)));
  }
  return out;
}

SubsetCollection collection_from(const json& v, Universe u, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of subsets");
  std::vector<SubsetMask> members;
  for (std::size_t i = 0; i < v.size(); ++i) {
    members.push_back(SubsetMask::of(point_list(v[i], u, path + "/" + std::to_string(i))));
  }
  return SubsetCollection(std::move(members));
}

Universe universe_from(const json& obj, const std::string& path) {
  const std::string where = path + "/points";
  const std::size_t n = natural(field(obj, "points", path), where);
  if (n == 0 || n > kMaxPoints) {
    bad(where, "points must be between 1 and " + std::to_string(kMaxPoints));
  }
  return Universe(n);
}

CenteredSpace space_from(const json& obj, const std::string& path) {
  require_keys(obj, {"points", "nu"}, path);
  const Universe u = universe_from(obj, path);
  const json& nu = field(obj, "nu", path);
  const std::string nu_path = path + "/nu";
  if (!nu.is_object()) bad(nu_path, "expected an object keyed by point index");
  std::vector<std::optional<SubsetCollection>> table(u.size());
  for (auto it = nu.begin(); it != nu.end(); ++it) {
    const std::string& key = it.key();
    const std::string key_path = nu_path + "/" + key;
    const bool canonical = !key.empty() && key.size() <= 2 &&
                           key.find_first_not_of("0123456789") == std::string::npos &&
                           (key.size() == 1 || key[0] != '0');
    if (!canonical) bad(key_path, "key is not a point index");
    const std::size_t x = std::stoul(key);
    if (!u.contains_point(x)) bad(key_path, "key is outside the universe");
    table[x] = collection_from(it.value(), u, key_path);
  }
  std::vector<SubsetCollection> out;
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (!table[x]) bad(nu_path, "no entry for point " + std::to_string(x));
    out.push_back(std::move(*table[x]));
  }
  return CenteredSpace(u, std::move(out));
}

CollectionDocument collection_doc_from(const json& obj, const std::string& path) {
  require_keys(obj, {"points", "collection"}, path);
  const Universe u = universe_from(obj, path);
  return CollectionDocument{
      u, collection_from(field(obj, "collection", path), u, path + "/collection")};
}

EventuallyPeriodicSequence sequence_from(const json& obj, const std::string& path) {
  require_keys(obj, {"prefix", "cycle"}, path);
  auto list = [&](const char* key) {
    const json& v = field(obj, key, path);
    const std::string where = path + "/" + key;
    if (!v.is_array()) bad(where, "expected an array of points");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::size_t x = natural(v[i], where + "/" + std::to_string(i));
      if (x >= kMaxPoints) bad(where + "/" + std::to_string(i), "point index out of range");
      out.push_back(x);
    }
    return out;
  };
  std::vector<std::size_t> prefix = list("prefix");
  std::vector<std::size_t> cycle = list("cycle");
  if (cycle.empty()) bad(path + "/cycle", "cycle must be nonempty");
  return EventuallyPeriodicSequence(std::move(prefix), std::move(cycle));
}

std::string join_points(const std::vector<std::size_t>& points) {
  std::string out = "[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(points[i]);
  }
  return out + "]";
}

}  // namespace

CenteredSpace parse_space(std::string_view text) { return space_from(parse_json(text), ""); }

CollectionDocument parse_collection(std::string_view text) {
  return collection_doc_from(parse_json(text), "");
}

EventuallyPeriodicSequence parse_sequence(std::string_view text) {
  return sequence_from(parse_json(text), "");
}

Cone parse_cone(std::string_view text) {
  const json obj = parse_json(text);
  require_keys(obj, {"points", "legs"}, "");
  const Universe apex = universe_from(obj, "");
  const json& legs = field(obj, "legs", "");
  if (!legs.is_array()) bad("/legs", "expected an array of legs");
  std::vector<ConeLeg> out;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const std::string path = "/legs/" + std::to_string(i);
    require_keys(legs[i], {"space", "map"}, path);
    CenteredSpace space = space_from(field(legs[i], "space", path), path + "/space");
    const json& map = field(legs[i], "map", path);
    std::vector<std::size_t> values = point_list(map, space.universe(), path + "/map");
    if (values.size() != apex.size()) {
      bad(path + "/map", "map needs one value per apex point");
    }
    out.push_back(ConeLeg{space, FiniteFunction(apex, space.universe(), std::move(values))});
  }
  return Cone(apex, std::move(out));
}

Document parse_document(std::string_view text) {
  const json obj = parse_json(text);
  if (!obj.is_object()) bad("", "expected an object");
  if (obj.contains("nu")) return space_from(obj, "");
  if (obj.contains("collection")) return collection_doc_from(obj, "");
  bad("", "expected a space (\"nu\") or a collection (\"collection\") document");
}

std::string to_json(SubsetMask a) { return join_points(a.points()); }

std::string to_json(const SubsetCollection& p) {
  std::string out = "[";
  bool first = true;
  for (SubsetMask a : p) {
    if (!first) out += ", ";
    out += to_json(a);
    first = false;
  }
  return out + "]";
}

std::string to_json(const FiniteFunction& f) { return to_string(f); }

std::string serialize(const CenteredSpace& s) {
  std::ostringstream os;
  os << "{\n  \"points\": " << s.universe().size() << ",\n  \"nu\": {\n";
  for (std::size_t x = 0; x < s.universe().size(); ++x) {
    os << "    \"" << x << "\": " << to_json(s.nu(x));
    os << (x + 1 < s.universe().size() ? ",\n" : "\n");
  }
  os << "  }\n}\n";
  return os.str();
}

std::string serialize(const CollectionDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"points\": " << doc.universe.size()
     << ",\n  \"collection\": " << to_json(doc.collection) << "\n}\n";
  return os.str();
}

std::string serialize(const Document& doc) {
  return std::visit([](const auto& d) { return serialize(d); }, doc);
}

std::string serialize(const EventuallyPeriodicSequence& seq) {
  const std::vector<std::size_t> prefix(seq.prefix().begin(), seq.prefix().end());
  const std::vector<std::size_t> cycle(seq.cycle().begin(), seq.cycle().end());
  return "{\"prefix\": " + join_points(prefix) + ", \"cycle\": " + join_points(cycle) + "}\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace centeredkit
