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

// centeredkit: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 cap
// refusal.

#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "centeredkit/categories.hpp"
#include "centeredkit/coincidence.hpp"
#include "centeredkit/error.hpp"
#include "centeredkit/germs.hpp"
#include "centeredkit/io.hpp"
#include "centeredkit/limits.hpp"
#include "centeredkit/setalgebra.hpp"
#include "centeredkit/spaces.hpp"
#include "centeredkit/suites.hpp"

namespace ck = centeredkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string format = "text";
  std::string file;
  std::string second_file;
  std::string suite;
  std::string op;
  std::string category;
  std::string from;
  std::optional<std::size_t> max_points;
  std::optional<std::size_t> max_colors;
  std::optional<std::size_t> point;
  std::size_t codomain = 2;
  std::string target_file;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* json_bool(bool b) { return b ? "true" : "false"; }

bool json_output(const Options& o) { return o.format == "json"; }

ck::SpaceClass require_class(const std::string& name, const char* flag) {
  if (auto c = ck::parse_space_class(name)) return *c;
  throw ck::InputError(std::string(flag) + " must be one of Centered, Raster, Filterbase, "
                       "PreTop, Top; got '" + name + "'");
}

std::size_t require_point(const Options& o, const ck::CenteredSpace& s) {
  if (!o.point) throw ck::InputError("--point is required");
  if (!s.universe().contains_point(*o.point)) {
    throw ck::InputError("--point " + std::to_string(*o.point) + " is outside the space");
  }
  return *o.point;
}

int cmd_classify(const Options& o) {
  const ck::Document doc = ck::parse_document(ck::read_text_file(o.file));
  if (const auto* c = std::get_if<ck::CollectionDocument>(&doc)) {
    if (c->collection.empty()) throw ck::InputError("collection is empty");
    const ck::CollectionClass k = ck::classify_collection(c->collection, c->universe);
    const bool ultra = ck::is_ultrafilter(c->collection, c->universe);
    if (json_output(o)) {
      std::cout << "{\"raster\": " << json_bool(k.is_raster)
                << ", \"filterbase\": " << json_bool(k.is_filterbase)
                << ", \"filter\": " << json_bool(k.is_filter)
                << ", \"ultrafilter\": " << json_bool(ultra) << "}\n";
    } else {
      std::cout << "raster: " << yes_no(k.is_raster) << ", filterbase: " << yes_no(k.is_filterbase)
                << ", filter: " << yes_no(k.is_filter) << '\n'
                << "ultrafilter: " << yes_no(ultra) << '\n';
    }
    return kExitOk;
  }
  const auto& s = std::get<ck::CenteredSpace>(doc);
  const ck::SpaceClassification cls = ck::classify_space(s);
  if (json_output(o)) {
    std::cout << "{\"points\": [";
  }
  for (std::size_t x = 0; x < s.universe().size(); ++x) {
    const ck::SubsetCollection& p = s.nu(x);
    const ck::CollectionClass k =
        p.empty() ? ck::CollectionClass{} : ck::classify_collection(p, s.universe());
    if (json_output(o)) {
      std::cout << (x ? ", " : "") << "{\"raster\": " << json_bool(k.is_raster)
                << ", \"filterbase\": " << json_bool(k.is_filterbase)
                << ", \"filter\": " << json_bool(k.is_filter) << "}";
    } else {
      std::cout << "point " << x << ": raster: " << yes_no(k.is_raster)
                << ", filterbase: " << yes_no(k.is_filterbase)
                << ", filter: " << yes_no(k.is_filter) << '\n';
    }
  }
  if (json_output(o)) {
    std::cout << "], \"class\": \"" << ck::to_string(cls.most_specific) << "\"}\n";
  } else {
    std::cout << "class: " << ck::to_string(cls.most_specific) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, const ck::Limits& limits) {
  ck::SuiteOptions options{o.max_points, o.max_colors, limits};
  std::vector<std::string_view> suites;
  if (o.suite == "all") {
    suites = ck::suite_names();
  } else {
    suites.push_back(o.suite);
  }
  bool passed = true;
  for (std::string_view name : suites) {
    const ck::SuiteReport report = ck::run_suite(name, options);
    std::cout << (json_output(o) ? ck::render_json(report) : ck::render_text(report));
    std::cerr << report.suite << ": wall time " << report.wall_seconds << " s\n";
    passed = passed && report.passed();
  }
  return passed ? kExitOk : kExitFailed;
}

ck::SpaceClass default_reflection_source(ck::SpaceClass into) {
  switch (into) {
    case ck::SpaceClass::Top:
      return ck::SpaceClass::PreTop;
    case ck::SpaceClass::PreTop:
      return ck::SpaceClass::Filterbase;
    case ck::SpaceClass::Raster:
      return ck::SpaceClass::Centered;
    default:
      throw ck::InputError(std::string(ck::to_string(into)) + " has no reflection here");
  }
}

ck::SpaceClass default_coreflection_source(ck::SpaceClass into, const ck::CenteredSpace& s) {
  switch (into) {
    case ck::SpaceClass::Filterbase:
    case ck::SpaceClass::Raster:
      return ck::SpaceClass::Centered;
    case ck::SpaceClass::PreTop:
      return ck::belongs_to(s, ck::SpaceClass::Raster) ? ck::SpaceClass::Raster
                                                       : ck::SpaceClass::Filterbase;
    default:
      throw ck::InputError(std::string(ck::to_string(into)) + " has no coreflection here");
  }
}

int cmd_transform(const Options& o) {
  const std::string text = ck::read_text_file(o.file);
  if (o.op == "initial") {
    const ck::Cone cone = ck::parse_cone(text);
    std::cout << ck::serialize(ck::initial_structure(cone, require_class(o.category, "--category")));
    return kExitOk;
  }
  if (o.op == "up" || o.op == "cap" || o.op == "filter" || o.op == "canon") {
    const ck::Document doc = ck::parse_document(text);
    if (o.op == "canon") {
      std::cout << ck::serialize(doc);
      return kExitOk;
    }
    auto apply = [&](const ck::SubsetCollection& p, ck::Universe u) {
      if (o.op == "up") return ck::up_closure(p, u);
      if (o.op == "cap") return ck::cap_closure(p);
      if (p.empty()) throw ck::InputError("the generated filter needs a nonempty collection");
      return ck::generated_filter(p, u);
    };
    if (const auto* c = std::get_if<ck::CollectionDocument>(&doc)) {
      std::cout << ck::serialize(ck::CollectionDocument{c->universe, apply(c->collection, c->universe)});
    } else {
      const auto& s = std::get<ck::CenteredSpace>(doc);
      ck::require_valid_space(s);
      std::cout << ck::serialize(ck::map_structure(
          s, [&](std::size_t, const ck::SubsetCollection& p) { return apply(p, s.universe()); }));
    }
    return kExitOk;
  }
  const ck::CenteredSpace s = ck::parse_space(text);
  ck::require_valid_space(s);
  if (o.op == "open-sets") {
    std::cout << ck::serialize(ck::CollectionDocument{s.universe(), ck::open_sets(s)});
    return kExitOk;
  }
  const ck::SpaceClass into = require_class(o.category, "--category");
  if (o.op == "reflect") {
    const ck::SpaceClass from =
        o.from.empty() ? default_reflection_source(into) : require_class(o.from, "--from");
    std::cout << ck::serialize(ck::reflect(s, from, into));
    return kExitOk;
  }
  if (o.op == "coreflect") {
    const ck::SpaceClass from =
        o.from.empty() ? default_coreflection_source(into, s) : require_class(o.from, "--from");
    std::cout << ck::serialize(ck::coreflect(s, from, into));
    return kExitOk;
  }
  if (o.op == "amnestic") {
    std::cout << ck::serialize(ck::amnestic_representative(s, into));
    return kExitOk;
  }
  throw ck::InputError("unknown transform '" + o.op +
                       "'; expected up, cap, filter, canon, reflect, coreflect, initial, "
                       "open-sets or amnestic");
}

int cmd_converges(const Options& o) {
  const ck::CenteredSpace s = ck::parse_space(ck::read_text_file(o.file));
  ck::require_valid_space(s);
  const ck::EventuallyPeriodicSequence seq = ck::parse_sequence(ck::read_text_file(o.second_file));
  const bool verdict = ck::converges(s, seq, require_point(o, s));
  if (json_output(o)) {
    std::cout << "{\"converges\": " << json_bool(verdict) << "}\n";
  } else {
    std::cout << "converges: " << yes_no(verdict) << '\n';
  }
  return kExitOk;
}

int cmd_germs(const Options& o, const ck::Limits& limits) {
  const ck::CenteredSpace s = ck::parse_space(ck::read_text_file(o.file));
  ck::require_valid_space(s);
  const std::size_t x = require_point(o, s);
  const ck::CenteredSpace target = o.target_file.empty()
                                       ? ck::CenteredSpace::discrete(ck::Universe(o.codomain))
                                       : ck::parse_space(ck::read_text_file(o.target_file));
  const auto classes = ck::germ_partition(s, x, target, limits);
  std::size_t total = 0;
  for (const auto& cls : classes) total += cls.size();
  if (json_output(o)) {
    std::cout << "{\"point\": " << x << ", \"codomain\": " << target.universe().size()
              << ", \"centered_functions\": " << total << ", \"classes\": [";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::cout << (i ? ", " : "") << "[";
      for (std::size_t j = 0; j < classes[i].size(); ++j) {
        std::cout << (j ? ", " : "") << ck::to_json(classes[i][j]);
      }
      std::cout << "]";
    }
    std::cout << "]}\n";
  } else {
    std::cout << "point: " << x << '\n'
              << "codomain: " << target.universe().size() << '\n'
              << "centered functions: " << total << '\n'
              << "classes: " << classes.size() << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::cout << "class " << i + 1 << " (" << classes[i].size() << "):";
      for (const auto& f : classes[i]) std::cout << ' ' << ck::to_json(f);
      std::cout << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite rasters, filterbases, filters and centered spaces"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "Classify a collection or a space");
  classify->add_option("file", o.file, "Collection or space document")->required();
  add_format(classify);

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("--suite", o.suite, "Suite id, or 'all'")->required();
  verify->add_option("--max-points", o.max_points, "Universe size bound");
  verify->add_option("--max-colors", o.max_colors, "Codomain size");
  add_format(verify);

  auto* transform = app.add_subcommand("transform", "Closures and categorical constructions");
  transform
      ->add_option("op", o.op,
                   "up | cap | filter | canon | reflect | coreflect | initial | open-sets | "
                   "amnestic")
      ->required();
  transform->add_option("file", o.file, "Input document")->required();
  transform->add_option("--category", o.category, "Target class");
  transform->add_option("--from", o.from, "Source class for reflect/coreflect");

  auto* converges = app.add_subcommand("converges", "Sequence convergence at a point");
  converges->add_option("space", o.file, "Space document")->required();
  converges->add_option("sequence", o.second_file, "Sequence document")->required();
  converges->add_option("--point", o.point, "Limit point")->required();
  add_format(converges);

  auto* germs = app.add_subcommand("germs", "Partition of the centered functions into germs");
  germs->add_option("space", o.file, "Space document")->required();
  germs->add_option("--point", o.point, "Point")->required();
  germs->add_option("--codomain", o.codomain, "Size of the discrete target space")
      ->capture_default_str();
  germs->add_option("--target", o.target_file, "Target space document instead of discrete");
  add_format(germs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const ck::Limits limits = ck::Limits::from_environment();
    if (*classify) return cmd_classify(o);
    if (*verify) return cmd_verify(o, limits);
    if (*transform) return cmd_transform(o);
    if (*converges) return cmd_converges(o);
    if (*germs) return cmd_germs(o, limits);
  } catch (const ck::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitCap;
  } catch (const ck::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
