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

#include "centeredkit/categories.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "centeredkit/error.hpp"
#include "centeredkit/setalgebra.hpp"

namespace centeredkit {

namespace {

std::string describe(const CenteredSpace& s) {
  std::string out = "[";
  for (std::size_t x = 0; x < s.universe().size(); ++x) {
    if (x != 0) out += ", ";
    out += to_string(s.nu(x));
  }
  return out + "]";
}

void require_in(const CenteredSpace& s, SpaceClass c, const char* role) {
  if (!belongs_to(s, c)) {
    throw InputError(std::string(role) + " " + describe(s) + " is not a " +
                     std::string(to_string(c)) + " space");
  }
}

void require_probe_scale(Universe u, const Limits& limits) {
  limits.check();
  if (u.size() > limits.max_probe_points) {
    throw CapExceeded("universal-property check over " + std::to_string(u.size()) +
                      " points exceeds the probe cap of " +
                      std::to_string(limits.max_probe_points) + " points");
  }
}

// Closes one raw collection into the given class.
SubsetCollection close_in(SpaceClass category, const SubsetCollection& p, Universe u) {
  switch (category) {
    case SpaceClass::Centered:
      return p;
    case SpaceClass::Filterbase:
      return cap_closure(p);
    case SpaceClass::Raster:
      return up_closure(p, u);
    case SpaceClass::PreTop:
    case SpaceClass::Top:
      return up_closure(cap_closure(p), u);
  }
  return p;
}

SubsetCollection up_or_top(const SubsetCollection& p, Universe u) {
  return p.empty() ? SubsetCollection{SubsetMask::full(u)} : up_closure(p, u);
}

SubsetCollection cap_or_top(const SubsetCollection& p, Universe u) {
  return p.empty() ? SubsetCollection{SubsetMask::full(u)} : cap_closure(p);
}

}  // namespace

Cone::Cone(Universe apex, std::vector<ConeLeg> legs) : apex_(apex), legs_(std::move(legs)) {
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    const ConeLeg& leg = legs_[i];
    if (!(leg.map.domain() == apex_) || !(leg.map.codomain() == leg.space.universe())) {
      throw InputError("leg " + std::to_string(i) + " does not map the apex into its space");
    }
  }
}

CenteredSpace initial_structure(const Cone& cone, SpaceClass category) {
  for (const ConeLeg& leg : cone.legs()) require_in(leg.space, category, "leg space");
  const Universe u = cone.apex();
  std::vector<SubsetCollection> nu;
  nu.reserve(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (cone.legs().empty()) {
      nu.push_back(category == SpaceClass::Centered ? SubsetCollection{}
                                                    : SubsetCollection{SubsetMask::full(u)});
      continue;
    }
    std::vector<SubsetMask> preimages;
    for (const ConeLeg& leg : cone.legs()) {
      for (SubsetMask n : leg.space.nu(leg.map(x))) preimages.push_back(leg.map.preimage(n));
    }
    nu.push_back(close_in(category, SubsetCollection(std::move(preimages)), u));
  }
  return CenteredSpace(u, std::move(nu));
}

CheckResult verify_initial(const Cone& cone, const CenteredSpace& candidate,
                           SpaceClass category, std::span<const CenteredSpace> probes,
                           const Limits& limits) {
  require_probe_scale(cone.apex(), limits);
  if (!(candidate.universe() == cone.apex())) {
    return CheckResult::fail("candidate does not live on the apex");
  }
  if (!belongs_to(candidate, category)) {
    return CheckResult::fail("candidate " + describe(candidate) + " is not in " +
                             std::string(to_string(category)));
  }
  for (std::size_t i = 0; i < cone.legs().size(); ++i) {
    const ConeLeg& leg = cone.legs()[i];
    if (!is_centered(leg.map, candidate, leg.space)) {
      return CheckResult::fail("leg " + std::to_string(i) + " is not a morphism out of " +
                               describe(candidate));
    }
  }
  for (const CenteredSpace& z : probes) {
    require_probe_scale(z.universe(), limits);
    for (const FiniteFunction& g :
         all_functions(z.universe(), cone.apex(), limits.max_functions)) {
      const bool into_candidate = is_centered(g, z, candidate);
      bool through_legs = true;
      for (const ConeLeg& leg : cone.legs()) {
        if (!is_centered(compose(leg.map, g), z, leg.space)) {
          through_legs = false;
          break;
        }
      }
      if (into_candidate != through_legs) {
        return CheckResult::fail("map " + to_string(g) + " from probe " + describe(z) +
                                 (into_candidate ? " is" : " is not") +
                                 " a morphism into the candidate but its composites with the "
                                 "legs " +
                                 (through_legs ? "all are" : "are not all") + " morphisms");
      }
    }
  }
  return CheckResult::ok();
}

std::optional<CenteredSpace> refine_with_singleton(const CenteredSpace& candidate,
                                                   SpaceClass category) {
  const Universe u = candidate.universe();
  for (std::size_t x = 0; x < u.size(); ++x) {
    const SubsetMask point = SubsetMask::singleton(x);
    if (candidate.nu(x).contains(point)) continue;
    return map_structure(candidate, [&](std::size_t y, const SubsetCollection& p) {
      return y == x ? close_in(category, p.with(point), u) : p;
    });
  }
  return std::nullopt;
}

bool supports_reflection(SpaceClass from, SpaceClass into) noexcept {
  return (from == SpaceClass::PreTop && into == SpaceClass::Top) ||
         (from == SpaceClass::Filterbase && into == SpaceClass::PreTop) ||
         (from == SpaceClass::Centered && into == SpaceClass::Raster);
}

bool supports_coreflection(SpaceClass from, SpaceClass into) noexcept {
  return (from == SpaceClass::Centered && into == SpaceClass::Filterbase) ||
         (from == SpaceClass::Raster && into == SpaceClass::PreTop) ||
         (from == SpaceClass::Filterbase && into == SpaceClass::PreTop) ||
         (from == SpaceClass::Centered && into == SpaceClass::Raster);
}

CenteredSpace reflect(const CenteredSpace& s, SpaceClass from, SpaceClass into) {
  if (!supports_reflection(from, into)) {
    throw InputError(std::string(to_string(into)) + " is not reflective in " +
                     std::string(to_string(from)));
  }
  require_in(s, from, "space");
  const Universe u = s.universe();
  if (into == SpaceClass::Top) return neighborhood_space(u, open_sets(s));
  return map_structure(s, [u](std::size_t x, const SubsetCollection& p) {
    if (p.empty()) {
      throw InputError("point " + std::to_string(x) +
                       " has no probes; no raster structure receives the identity from it");
    }
    return up_closure(p, u);
  });
}

CenteredSpace coreflect(const CenteredSpace& s, SpaceClass from, SpaceClass into) {
  if (!supports_coreflection(from, into)) {
    throw InputError(std::string(to_string(into)) + " is not coreflective in " +
                     std::string(to_string(from)));
  }
  require_in(s, from, "space");
  const Universe u = s.universe();
  const bool by_intersections =
      (from == SpaceClass::Centered && into == SpaceClass::Filterbase) ||
      (from == SpaceClass::Raster && into == SpaceClass::PreTop);
  return map_structure(s, [&](std::size_t, const SubsetCollection& p) {
    return by_intersections ? cap_or_top(p, u) : up_or_top(p, u);
  });
}

CheckResult verify_reflection(const CenteredSpace& s, const CenteredSpace& reflected,
                              SpaceClass into, std::span<const CenteredSpace> probes,
                              const Limits& limits) {
  require_probe_scale(s.universe(), limits);
  if (!(reflected.universe() == s.universe())) {
    return CheckResult::fail("reflection lives on a different set");
  }
  if (!belongs_to(reflected, into)) {
    return CheckResult::fail("reflection " + describe(reflected) + " is not in " +
                             std::string(to_string(into)));
  }
  const FiniteFunction id = FiniteFunction::identity(s.universe());
  if (!is_centered(id, s, reflected)) {
    return CheckResult::fail("identity " + describe(s) + " -> " + describe(reflected) +
                             " is not a morphism");
  }
  for (const CenteredSpace& t : probes) {
    require_probe_scale(t.universe(), limits);
    for (const FiniteFunction& f :
         all_functions(s.universe(), t.universe(), limits.max_functions)) {
      if (is_centered(f, s, t) && !is_centered(f, reflected, t)) {
        return CheckResult::fail("morphism " + to_string(f) + " into " + describe(t) +
                                 " does not factor through " + describe(reflected));
      }
    }
  }
  return CheckResult::ok();
}

CheckResult verify_coreflection(const CenteredSpace& s, const CenteredSpace& coreflected,
                                SpaceClass into, std::span<const CenteredSpace> probes,
                                const Limits& limits) {
  require_probe_scale(s.universe(), limits);
  if (!(coreflected.universe() == s.universe())) {
    return CheckResult::fail("coreflection lives on a different set");
  }
  if (!belongs_to(coreflected, into)) {
    return CheckResult::fail("coreflection " + describe(coreflected) + " is not in " +
                             std::string(to_string(into)));
  }
  const FiniteFunction id = FiniteFunction::identity(s.universe());
  if (!is_centered(id, coreflected, s)) {
    return CheckResult::fail("identity " + describe(coreflected) + " -> " + describe(s) +
                             " is not a morphism");
  }
  for (const CenteredSpace& d : probes) {
    require_probe_scale(d.universe(), limits);
    for (const FiniteFunction& f :
         all_functions(d.universe(), s.universe(), limits.max_functions)) {
      if (is_centered(f, d, s) && !is_centered(f, d, coreflected)) {
        return CheckResult::fail("morphism " + to_string(f) + " from " + describe(d) +
                                 " does not factor through " + describe(coreflected));
      }
    }
  }
  return CheckResult::ok();
}

FiberComparison fiber_compare(const CenteredSpace& s1, const CenteredSpace& s2) {
  if (!(s1.universe() == s2.universe())) {
    throw InputError("fiber comparison needs spaces on the same set");
  }
  const FiniteFunction id = FiniteFunction::identity(s1.universe());
  return FiberComparison{is_centered(id, s1, s2), is_centered(id, s2, s1)};
}

bool is_fiber_isomorphism(const CenteredSpace& s1, const CenteredSpace& s2) {
  return fiber_compare(s1, s2).equivalent();
}

CenteredSpace amnestic_representative(const CenteredSpace& s, SpaceClass target) {
  if (target == SpaceClass::PreTop) {
    require_in(s, SpaceClass::Filterbase, "space");
  } else if (target == SpaceClass::Raster) {
    require_in(s, SpaceClass::Centered, "space");
  } else {
    throw InputError(std::string(to_string(target)) +
                     " is not an amnestic modification handled here; use PreTop or Raster");
  }
  const Universe u = s.universe();
  return map_structure(s, [u](std::size_t x, const SubsetCollection& p) {
    if (p.empty()) {
      throw InputError("point " + std::to_string(x) +
                       " has no probes; its fiber class contains no raster structure");
    }
    return up_closure(p, u);
  });
}

}  // namespace centeredkit
