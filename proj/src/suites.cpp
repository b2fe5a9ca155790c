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

#include "centeredkit/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>
#include <utility>

#include "centeredkit/categories.hpp"
#include "centeredkit/coincidence.hpp"
#include "centeredkit/error.hpp"
#include "centeredkit/germs.hpp"
#include "centeredkit/io.hpp"
#include "centeredkit/setalgebra.hpp"
#include "centeredkit/spaces.hpp"

namespace centeredkit {

namespace {

std::string json_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

std::string space_json(const CenteredSpace& s) {
  std::string out = "{\"points\": " + std::to_string(s.universe().size()) + ", \"nu\": {";
  for (std::size_t x = 0; x < s.universe().size(); ++x) {
    if (x != 0) out += ", ";
    out += "\"" + std::to_string(x) + "\": " + to_json(s.nu(x));
  }
  return out + "}}";
}

std::string collection_json(Universe u, const SubsetCollection& p) {
  return "{\"points\": " + std::to_string(u.size()) + ", \"collection\": " + to_json(p) + "}";
}

void require_points(std::size_t n, std::size_t lo, std::size_t cap, const char* what) {
  if (n < lo) {
    throw InputError(std::string(what) + " needs --max-points of at least " + std::to_string(lo));
  }
  if (n > cap) {
    throw CapExceeded(std::string(what) + " over " + std::to_string(n) +
                      " points exceeds the cap of " + std::to_string(cap) + " points");
  }
}

void require_colors(std::size_t m, std::size_t lo, const char* what) {
  if (m < lo) {
    throw InputError(std::string(what) + " needs --max-colors of at least " + std::to_string(lo));
  }
  if (m > kMaxPoints) {
    throw InputError("--max-colors must be at most " + std::to_string(kMaxPoints));
  }
}

void biconditional(SuiteReport& r, const SuiteOptions& o, RelationMode mode) {
  const bool exact = mode == RelationMode::Exact;
  r.max_points = o.max_points.value_or(3);
  r.max_colors = o.max_colors.value_or(exact ? 3 : 2);
  require_points(r.max_points, 1, o.limits.max_enum_points, "collection enumeration");
  require_colors(r.max_colors, exact ? 3 : 2, r.suite.c_str());
  const Universe u(r.max_points);
  const Universe y(r.max_colors);
  for (const SubsetCollection& p : enumerate_collections(u, std::nullopt, o.limits)) {
    ++r.cases;
    const CollectionClass c = classify_collection(p, u);
    const bool kind = exact ? c.is_filter : c.is_filterbase;
    const RelationReport rel = analyze_relation(p, u, y, mode, o.limits);
    if (kind != rel.is_nontrivial_equivalence()) {
      r.failures.push_back("{\"collection\": " + collection_json(u, p) + ", \"mode\": " +
                           json_quote(to_string(mode)) + ", \"colors\": " +
                           std::to_string(r.max_colors) + ", " +
                           (exact ? "\"is_filter\": " : "\"is_filterbase\": ") +
                           bool_json(kind) + ", \"nontrivial_equivalence\": " +
                           bool_json(rel.is_nontrivial_equivalence()) + "}");
    }
  }
}

void filter_biconditional(SuiteReport& r, const SuiteOptions& o) {
  biconditional(r, o, RelationMode::Exact);
}

void filterbase_biconditional(SuiteReport& r, const SuiteOptions& o) {
  biconditional(r, o, RelationMode::Weak);
}

void sharpness_card3(SuiteReport& r, const SuiteOptions& o) {
  r.max_points = 4;
  r.max_colors = 2;
  const Universe u(4);
  const Universe y(2);
  // The stated instance, then the same collection with X added. Reflexivity
  // of the exact relation needs X as a member, so only the second can be an
  // equivalence; the first is still checked as stated.
  const SubsetCollection stated = SubsetCollection::of({{0, 1}, {0, 2}, {0, 3}});
  const SubsetCollection completed = stated.with(SubsetMask::full(u));
  for (const SubsetCollection& p : {stated, completed}) {
    ++r.cases;
    const CollectionClass c = classify_collection(p, u);
    const RelationReport rel = analyze_relation(p, u, y, RelationMode::Exact, o.limits);
    std::string note = "collection " + to_json(p) + ": filterbase: " +
                       (c.is_filterbase ? "yes" : "no") + ", filter: " +
                       (c.is_filter ? "yes" : "no") + ", exact relation on " +
                       std::to_string(rel.function_count) + " functions: reflexive " +
                       (rel.reflexive ? "yes" : "no") + ", symmetric " +
                       (rel.symmetric ? "yes" : "no") + ", transitive " +
                       (rel.transitive ? "yes" : "no") + ", nontrivial " +
                       (rel.nontrivial ? "yes" : "no");
    if (rel.counterexample) {
      note += ", first violation (" + std::string(to_string(rel.counterexample->property)) + "):";
      for (const FiniteFunction& f : rel.counterexample->functions) note += " " + to_json(f);
    }
    r.notes.push_back(note);
    if (c.is_filterbase || c.is_filter || !rel.is_nontrivial_equivalence()) {
      r.failures.push_back("{\"collection\": " + collection_json(u, p) +
                           ", \"is_filterbase\": " + bool_json(c.is_filterbase) +
                           ", \"is_filter\": " + bool_json(c.is_filter) +
                           ", \"nontrivial_equivalence\": " +
                           bool_json(rel.is_nontrivial_equivalence()) + "}");
    }
  }
}

void witness_identities(SuiteReport& r, const SuiteOptions& o) {
  r.max_points = o.max_points.value_or(4);
  r.max_colors = o.max_colors.value_or(3);
  require_points(r.max_points, 1, kMaxPoints, "witness enumeration");
  require_colors(r.max_colors, 2, "witness-identities");
  const Universe u(r.max_points);
  const Universe y(r.max_colors);
  const std::size_t m = r.max_colors;
  auto report = [&](const char* which, SubsetMask a, SubsetMask b, std::string colors) {
    r.failures.push_back("{\"construction\": " + json_quote(which) + ", \"a\": " + to_json(a) +
                         ", \"b\": " + to_json(b) + ", \"colors\": " + colors + "}");
  };
  for (std::uint64_t ab = 0; ab < u.subset_count(); ++ab) {
    for (std::uint64_t bb = 0; bb < u.subset_count(); ++bb) {
      const SubsetMask a(static_cast<std::uint32_t>(ab));
      const SubsetMask b(static_cast<std::uint32_t>(bb));
      for (std::size_t y1 = 0; y1 < m; ++y1) {
        for (std::size_t y2 = 0; y2 < m; ++y2) {
          if (y2 == y1) continue;
          ++r.cases;
          const WitnessTriple w = witness_triple_filterbase(a, b, u, y, y1, y2);
          if (coincidence_set(w.g, w.h) != a || !b.subset_of(coincidence_set(w.f, w.g)) ||
              coincidence_set(w.f, w.h) != (a & b)) {
            report("filterbase", a, b,
                   "[" + std::to_string(y1) + ", " + std::to_string(y2) + "]");
          }
          for (std::size_t y3 = 0; y3 < m; ++y3) {
            if (y3 == y1 || y3 == y2) continue;
            ++r.cases;
            const WitnessTriple t = witness_triple_filter(a, b, u, y, y1, y2, y3);
            if (coincidence_set(t.f, t.h) != a || coincidence_set(t.h, t.g) != b ||
                coincidence_set(t.f, t.g) != (a & b)) {
              report("filter", a, b,
                     "[" + std::to_string(y1) + ", " + std::to_string(y2) + ", " +
                         std::to_string(y3) + "]");
            }
          }
        }
      }
    }
  }
}

void closure_laws(SuiteReport& r, const SuiteOptions& o) {
  r.max_points = o.max_points.value_or(3);
  require_points(r.max_points, 1, o.limits.max_enum_points, "collection enumeration");
  std::uint64_t least_filterbase_gaps = 0;
  for (std::size_t n = 1; n <= r.max_points; ++n) {
    const Universe u(n);
    const std::vector<SubsetCollection> rasters =
        all_collections(u, CollectionKind::Raster, o.limits);
    const std::vector<SubsetCollection> filterbases =
        all_collections(u, CollectionKind::Filterbase, o.limits);
    const std::vector<SubsetCollection> filters =
        all_collections(u, CollectionKind::Filter, o.limits);
    auto least_among = [](const SubsetCollection& q, const SubsetCollection& p,
                          const std::vector<SubsetCollection>& family) {
      return std::all_of(family.begin(), family.end(), [&](const SubsetCollection& k) {
        return !p.subset_of(k) || q.subset_of(k);
      });
    };
    for (const SubsetCollection& p : enumerate_collections(u, std::nullopt, o.limits)) {
      ++r.cases;
      std::vector<std::string> broken;
      auto expect = [&](bool ok, const char* law) {
        if (!ok) broken.push_back(law);
      };
      const SubsetCollection up = up_closure(p, u);
      const SubsetCollection cap = cap_closure(p);
      expect(p.subset_of(up), "P in up(P)");
      expect(p.subset_of(cap), "P in cap(P)");
      expect(up_closure(up, u) == up, "up idempotent");
      expect(cap_closure(cap) == cap, "cap idempotent");
      expect(up_closure(cap, u) == cap_closure(up), "up(cap(P)) = cap(up(P))");
      if (satisfies_f0(p, u)) {
        const CollectionClass c = classify_collection(p, u);
        const SubsetCollection gen = generated_filter(p, u);
        expect(c.is_filter == (c.is_raster && c.is_filterbase), "filter = raster and filterbase");
        expect(c.is_raster == (p == up), "raster iff P = up(P)");
        expect(c.is_filterbase == finer(p, cap), "filterbase iff P finer than cap(P)");
        expect(c.is_filter == (p == gen), "filter iff P = up(cap(P))");
        expect(has_kind(up, u, CollectionKind::Raster) && least_among(up, p, rasters),
               "up(P) least raster");
        expect(has_kind(gen, u, CollectionKind::Filter) && least_among(gen, p, filters),
               "up(cap(P)) least filter");
        // cap(P) is the coarsest filterbase above P at every size. Being
        // contained in every filterbase above P only holds up to 3 points: on
        // {0,1,2,3}, {{0,1,2},{0,1,3},{0}} is a filterbase above
        // {{0,1,2},{0,1,3}} that omits {0,1}.
        const bool cap_is_filterbase = has_kind(cap, u, CollectionKind::Filterbase);
        const bool coarsest = std::all_of(
            filterbases.begin(), filterbases.end(),
            [&](const SubsetCollection& k) { return !p.subset_of(k) || finer(k, cap); });
        expect(cap_is_filterbase && coarsest, "cap(P) coarsest filterbase");
        const bool least = least_among(cap, p, filterbases);
        if (n <= 3) {
          expect(least, "cap(P) least filterbase");
        } else if (!least) {
          ++least_filterbase_gaps;
        }
        if (c.is_raster) {
          expect(has_kind(cap, u, CollectionKind::Filter) && least_among(cap, p, filters),
                 "raster: cap(P) least filter");
        }
        if (c.is_filterbase) {
          expect(has_kind(up, u, CollectionKind::Filter) && least_among(up, p, filters),
                 "filterbase: up(P) least filter");
        }
      }
      for (const std::string& law : broken) {
        r.failures.push_back("{\"collection\": " + collection_json(u, p) +
                             ", \"law\": " + json_quote(law) + "}");
      }
    }
  }
  if (r.max_points >= 4) {
    r.notes.push_back("collections above 3 points whose cap closure is not below every "
                      "filterbase containing them: " +
                      std::to_string(least_filterbase_gaps));
  }
}

void ultrafilter(SuiteReport& r, const SuiteOptions& o) {
  r.max_points = o.max_points.value_or(4);
  require_points(r.max_points, 1, o.limits.max_enum_points, "collection enumeration");
  for (std::size_t n = 1; n <= r.max_points; ++n) {
    const Universe u(n);
    std::uint64_t count = 0;
    for (const SubsetCollection& p : enumerate_collections(u, std::nullopt, o.limits)) {
      ++r.cases;
      const bool partition = is_ultrafilter(p, u);
      const bool complement = is_ultrafilter_by_complement(p, u);
      count += partition ? 1 : 0;
      if (partition != complement) {
        r.failures.push_back("{\"collection\": " + collection_json(u, p) +
                             ", \"three_partition\": " + bool_json(partition) +
                             ", \"complement\": " + bool_json(complement) + "}");
      }
    }
    r.notes.push_back("ultrafilters on " + std::to_string(n) + " points: " +
                      std::to_string(count));
  }
}

std::vector<CenteredSpace> spaces_up_to(std::size_t max_points, SpaceClass c,
                                        const Limits& limits) {
  std::vector<CenteredSpace> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    for (CenteredSpace& s : enumerate_spaces(Universe(n), c, limits)) out.push_back(std::move(s));
  }
  return out;
}

bool has_empty_probe_system(const CenteredSpace& s) {
  const auto nu = s.structure();
  return std::any_of(nu.begin(), nu.end(), [](const SubsetCollection& p) { return p.empty(); });
}

struct Arrow {
  bool reflective;
  SpaceClass from;
  SpaceClass into;
};

constexpr std::array<Arrow, 7> kArrows = {{
    {true, SpaceClass::PreTop, SpaceClass::Top},
    {true, SpaceClass::Filterbase, SpaceClass::PreTop},
    {true, SpaceClass::Centered, SpaceClass::Raster},
    {false, SpaceClass::Centered, SpaceClass::Filterbase},
    {false, SpaceClass::Raster, SpaceClass::PreTop},
    {false, SpaceClass::Filterbase, SpaceClass::PreTop},
    {false, SpaceClass::Centered, SpaceClass::Raster},
}};

void reflections(SuiteReport& r, const SuiteOptions& o) {
  r.max_points = o.max_points.value_or(2);
  require_points(r.max_points, 1, o.limits.max_probe_points, "probe enumeration");
  for (const Arrow& arrow : kArrows) {
    const std::string label = std::string(arrow.reflective ? "reflection " : "coreflection ") +
                              std::string(to_string(arrow.from)) + " -> " +
                              std::string(to_string(arrow.into));
    const std::vector<CenteredSpace> probes = spaces_up_to(r.max_points, arrow.into, o.limits);
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    for (const CenteredSpace& s : spaces_up_to(r.max_points, arrow.from, o.limits)) {
      if (arrow.reflective && arrow.into == SpaceClass::Raster && has_empty_probe_system(s)) {
        ++skipped;
        continue;
      }
      ++r.cases;
      ++checked;
      const CheckResult res =
          arrow.reflective
              ? verify_reflection(s, reflect(s, arrow.from, arrow.into), arrow.into, probes,
                                  o.limits)
              : verify_coreflection(s, coreflect(s, arrow.from, arrow.into), arrow.into, probes,
                                    o.limits);
      if (!res) {
        r.failures.push_back("{\"arrow\": " + json_quote(label) + ", \"space\": " + space_json(s) +
                             ", \"reason\": " + json_quote(res.failure) + "}");
      }
    }
    std::string note = label + ": " + std::to_string(checked) + " spaces, " +
                       std::to_string(probes.size()) + " probes";
    if (skipped != 0) {
      note += ", " + std::to_string(skipped) + " spaces with an empty probe system have none";
    }
    r.notes.push_back(note);
  }

  // Mutation: intersections in place of up-closure is not the Raster
  // reflection, and the probe check has to catch it.
  const std::vector<CenteredSpace> raster_probes =
      spaces_up_to(r.max_points, SpaceClass::Raster, o.limits);
  std::uint64_t caught = 0;
  for (const CenteredSpace& s : spaces_up_to(r.max_points, SpaceClass::Centered, o.limits)) {
    if (has_empty_probe_system(s)) continue;
    const CenteredSpace wrong =
        map_structure(s, [](std::size_t, const SubsetCollection& p) { return cap_closure(p); });
    if (!verify_reflection(s, wrong, SpaceClass::Raster, raster_probes, o.limits)) ++caught;
  }
  ++r.cases;
  r.notes.push_back("intersection-closed stand-in for the Raster reflection rejected on " +
                    std::to_string(caught) + " spaces");
  if (caught == 0) {
    r.failures.push_back("{\"mutation\": \"cap in place of up\", \"reason\": \"never rejected\"}");
  }
}

void initial_structures(SuiteReport& r, const SuiteOptions& o) {
  r.max_points = o.max_points.value_or(2);
  require_points(r.max_points, 1, o.limits.max_probe_points, "probe enumeration");
  for (SpaceClass category : kAllSpaceClasses) {
    const std::vector<CenteredSpace> spaces = spaces_up_to(r.max_points, category, o.limits);
    std::uint64_t cones = 0;
    std::uint64_t mutated = 0;
    for (std::size_t n = 1; n <= r.max_points; ++n) {
      const Universe apex(n);
      std::vector<ConeLeg> options;
      for (const CenteredSpace& s : spaces) {
        for (FiniteFunction& f : all_functions(apex, s.universe(), o.limits.max_functions)) {
          options.push_back(ConeLeg{s, std::move(f)});
        }
      }
      auto check = [&](std::vector<ConeLeg> legs) {
        ++r.cases;
        ++cones;
        const Cone cone(apex, std::move(legs));
        const CenteredSpace candidate = initial_structure(cone, category);
        const CheckResult res = verify_initial(cone, candidate, category, spaces, o.limits);
        if (!res) {
          r.failures.push_back("{\"category\": " + json_quote(to_string(category)) +
                               ", \"candidate\": " + space_json(candidate) +
                               ", \"reason\": " + json_quote(res.failure) + "}");
        }
        if (auto finer_candidate = refine_with_singleton(candidate, category)) {
          ++mutated;
          if (verify_initial(cone, *finer_candidate, category, spaces, o.limits)) {
            r.failures.push_back("{\"category\": " + json_quote(to_string(category)) +
                                 ", \"mutated_candidate\": " + space_json(*finer_candidate) +
                                 ", \"reason\": \"strictly finer candidate passed\"}");
          }
        }
      };
      check({});
      for (const ConeLeg& a : options) {
        check({a});
        for (const ConeLeg& b : options) check({a, b});
      }
    }
    r.notes.push_back(std::string(to_string(category)) + ": " + std::to_string(cones) +
                      " cones, " + std::to_string(mutated) + " strictly finer mutants rejected");
  }
}

void amnesticity(SuiteReport& r, const SuiteOptions& o) {
  r.max_points = o.max_points.value_or(3);
  require_points(r.max_points, 2, o.limits.max_enum_points, "collection enumeration");
  for (CollectionKind kind : {CollectionKind::Raster, CollectionKind::Filter}) {
    for (std::size_t n = 1; n <= r.max_points; ++n) {
      const Universe u(n);
      const std::vector<SubsetCollection> family = all_collections(u, kind, o.limits);
      for (const SubsetCollection& p1 : family) {
        for (const SubsetCollection& p2 : family) {
          ++r.cases;
          if (finer(p1, p2) && finer(p2, p1) && p1 != p2) {
            r.failures.push_back("{\"first\": " + collection_json(u, p1) +
                                 ", \"second\": " + collection_json(u, p2) +
                                 ", \"reason\": \"mutually finer but unequal\"}");
          }
        }
      }
    }
  }

  const Universe two(2);
  for (SpaceClass c : {SpaceClass::Raster, SpaceClass::PreTop}) {
    const std::vector<CenteredSpace> fiber = enumerate_spaces(two, c, o.limits);
    for (const CenteredSpace& s1 : fiber) {
      for (const CenteredSpace& s2 : fiber) {
        ++r.cases;
        if (fiber_compare(s1, s2).equivalent() && !(s1 == s2)) {
          r.failures.push_back("{\"fiber\": " + json_quote(to_string(c)) + ", \"first\": " +
                               space_json(s1) + ", \"second\": " + space_json(s2) + "}");
        }
      }
    }
  }

  for (SpaceClass c : {SpaceClass::Filterbase, SpaceClass::Centered}) {
    const std::vector<CenteredSpace> fiber = enumerate_spaces(two, c, o.limits);
    std::optional<std::pair<CenteredSpace, CenteredSpace>> witness;
    for (std::size_t i = 0; i < fiber.size() && !witness; ++i) {
      for (std::size_t j = i + 1; j < fiber.size() && !witness; ++j) {
        if (fiber_compare(fiber[i], fiber[j]).equivalent()) witness = {fiber[i], fiber[j]};
      }
    }
    ++r.cases;
    if (witness) {
      r.notes.push_back(std::string(to_string(c)) + " fiber over 2 points is not amnestic: " +
                        space_json(witness->first) + " ~ " + space_json(witness->second));
    } else {
      r.failures.push_back("{\"fiber\": " + json_quote(to_string(c)) +
                           ", \"reason\": \"no mutually comparable unequal pair\"}");
    }
  }

  const std::pair<SpaceClass, SpaceClass> modifications[] = {
      {SpaceClass::Filterbase, SpaceClass::PreTop}, {SpaceClass::Centered, SpaceClass::Raster}};
  for (const auto& [source, target] : modifications) {
    std::vector<CenteredSpace> fiber;
    for (CenteredSpace& s : enumerate_spaces(two, source, o.limits)) {
      if (!has_empty_probe_system(s)) fiber.push_back(std::move(s));
    }
    const std::vector<CenteredSpace> targets = enumerate_spaces(two, target, o.limits);
    for (const CenteredSpace& s : fiber) {
      ++r.cases;
      const CenteredSpace rep = amnestic_representative(s, target);
      const auto fail = [&](const char* why) {
        r.failures.push_back("{\"target\": " + json_quote(to_string(target)) +
                             ", \"space\": " + space_json(s) + ", \"reason\": " + json_quote(why) +
                             "}");
      };
      if (!belongs_to(rep, target)) fail("representative outside the target class");
      if (!fiber_compare(s, rep).equivalent()) fail("representative not equivalent");
      if (!(amnestic_representative(rep, target) == rep)) fail("not idempotent");
      for (const CenteredSpace& t : targets) {
        if (fiber_compare(s, t).equivalent() && !(t == rep)) {
          fail("another target-class space in the same class");
        }
      }
      for (const CenteredSpace& s2 : fiber) {
        if (fiber_compare(s, s2).equivalent() &&
            !(amnestic_representative(s2, target) == rep)) {
          fail("representative not constant on the class");
        }
      }
    }
  }
}

// Every structure on u with arbitrary per-point collections, centered or not.
void for_each_structure(Universe u, const std::function<void(const CenteredSpace&)>& visit) {
  const std::uint64_t per_point = std::uint64_t{1} << u.subset_count();
  std::vector<std::uint64_t> codes(u.size(), 0);
  while (true) {
    std::vector<SubsetCollection> nu;
    for (std::size_t x = 0; x < u.size(); ++x) nu.push_back(decode_collection(codes[x], u));
    visit(CenteredSpace(u, std::move(nu)));
    std::size_t x = 0;
    while (x < u.size() && ++codes[x] == per_point) codes[x++] = 0;
    if (x == u.size()) break;
  }
}

void convergence_germs(SuiteReport& r, const SuiteOptions& o) {
  r.max_points = o.max_points.value_or(2);
  r.max_colors = o.max_colors.value_or(2);
  require_points(r.max_points, 1, std::min<std::size_t>(o.limits.max_enum_points, 2),
                 "structure enumeration");
  require_colors(r.max_colors, 2, "germ partition");
  for (std::size_t n = 1; n <= r.max_points; ++n) {
    const Universe u(n);
    for_each_structure(u, [&](const CenteredSpace& s) {
      ++r.cases;
      bool all_constant_converge = true;
      for (std::size_t x = 0; x < n; ++x) {
        all_constant_converge =
            all_constant_converge && converges(s, EventuallyPeriodicSequence::constant(x), x);
      }
      if (all_constant_converge != validate_space(s)) {
        r.failures.push_back("{\"space\": " + space_json(s) +
                             ", \"reason\": \"centering and constant-sequence convergence "
                             "disagree\"}");
      }
    });
  }

  const Universe three(3);
  const CenteredSpace target = CenteredSpace::discrete(Universe(r.max_colors));
  std::uint64_t partitions = 0;
  std::uint64_t refusals = 0;
  for (const CenteredSpace& s : enumerate_spaces(three, SpaceClass::Centered, o.limits)) {
    for (std::size_t x = 0; x < 3; ++x) {
      ++r.cases;
      const bool has_germs = has_kind(s.nu(x), three, CollectionKind::Filterbase);
      if (!has_germs) {
        try {
          germ_partition(s, x, target, o.limits);
          r.failures.push_back("{\"space\": " + space_json(s) + ", \"point\": " +
                               std::to_string(x) + ", \"reason\": \"germs not refused\"}");
        } catch (const InputError&) {
          ++refusals;
        }
        continue;
      }
      ++partitions;
      const auto classes = germ_partition(s, x, target, o.limits);
      const auto domain = centered_at_functions(s, x, target, o.limits);
      std::vector<FiniteFunction> seen;
      bool ok = true;
      for (const auto& cls : classes) {
        ok = ok && !cls.empty();
        for (const FiniteFunction& f : cls) {
          ok = ok && germ_class(s, x, f, target, o.limits) == cls;
          seen.push_back(f);
        }
      }
      std::sort(seen.begin(), seen.end());
      ok = ok && seen == domain;
      if (!ok) {
        r.failures.push_back("{\"space\": " + space_json(s) + ", \"point\": " +
                             std::to_string(x) + ", \"reason\": \"germ classes do not "
                             "partition the centered functions\"}");
      }
    }
  }
  r.notes.push_back("germ partitions checked on 3 points: " + std::to_string(partitions) +
                    ", refusals: " + std::to_string(refusals));
}

using SuiteFn = void (*)(SuiteReport&, const SuiteOptions&);

constexpr std::pair<std::string_view, SuiteFn> kSuites[] = {
    {"filter-biconditional", filter_biconditional},
    {"filterbase-biconditional", filterbase_biconditional},
    {"sharpness-card3", sharpness_card3},
    {"witness-identities", witness_identities},
    {"closure-laws", closure_laws},
    {"ultrafilter", ultrafilter},
    {"reflections", reflections},
    {"initial-structures", initial_structures},
    {"amnesticity", amnesticity},
    {"convergence-germs", convergence_germs},
};

}  // namespace

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> out;
  for (const auto& [name, fn] : kSuites) out.push_back(name);
  return out;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  options.limits.check();
  for (const auto& [id, fn] : kSuites) {
    if (id != name) continue;
    SuiteReport report;
    report.suite = std::string(id);
    const auto start = std::chrono::steady_clock::now();
    fn(report, options);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  std::string known;
  for (std::string_view n : suite_names()) known += "\n  " + std::string(n);
  throw InputError("unknown suite '" + std::string(name) + "'; available suites:" + known);
}

std::string render_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite: " << report.suite << '\n'
     << "max-points: " << report.max_points << '\n'
     << "max-colors: " << report.max_colors << '\n'
     << "cases: " << report.cases << '\n'
     << "failures: " << report.failures.size() << '\n';
  for (const std::string& note : report.notes) os << "note: " << note << '\n';
  for (const std::string& failure : report.failures) os << "failure: " << failure << '\n';
  os << "result: " << (report.passed() ? "pass" : "FAIL") << '\n';
  return os.str();
}

std::string render_json(const SuiteReport& report) {
  std::ostringstream os;
  os << "{\"suite\": " << json_quote(report.suite) << ", \"max_points\": " << report.max_points
     << ", \"max_colors\": " << report.max_colors << ", \"cases\": " << report.cases
     << ", \"notes\": [";
  for (std::size_t i = 0; i < report.notes.size(); ++i) {
    os << (i ? ", " : "") << json_quote(report.notes[i]);
  }
  os << "], \"failures\": [";
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    os << (i ? ", " : "") << report.failures[i];
  }
  os << "], \"passed\": " << bool_json(report.passed()) << "}\n";
  return os.str();
}

}  // namespace centeredkit
