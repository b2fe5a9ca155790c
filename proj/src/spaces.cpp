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

#include "centeredkit/spaces.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "centeredkit/error.hpp"

namespace centeredkit {

namespace {

void require_maps_between(const FiniteFunction& f, const CenteredSpace& src,
                          const CenteredSpace& dst) {
  if (!(f.domain() == src.universe()) || !(f.codomain() == dst.universe())) {
    throw InputError("map " + to_string(f) + " does not go from a " +
                     std::to_string(src.universe().size()) + "-point space to a " +
                     std::to_string(dst.universe().size()) + "-point space");
  }
}

bool all_points(const CenteredSpace& s, CollectionKind kind) {
  const auto nu = s.structure();
  return std::all_of(nu.begin(), nu.end(), [&](const SubsetCollection& p) {
    return has_kind(p, s.universe(), kind);
  });
}

}  // namespace

CenteredSpace::CenteredSpace(Universe u, std::vector<SubsetCollection> nu)
    : universe_(u), nu_(std::move(nu)) {
  if (nu_.size() != u.size()) {
    throw InputError("structure has " + std::to_string(nu_.size()) +
                     " collections for a universe of " + std::to_string(u.size()) +
                     " points");
  }
  for (const SubsetCollection& p : nu_) require_valid(p, u);
}

CenteredSpace CenteredSpace::discrete(Universe u) {
  std::vector<SubsetCollection> nu;
  for (std::size_t x = 0; x < u.size(); ++x) nu.push_back({SubsetMask::singleton(x)});
  return CenteredSpace(u, std::move(nu));
}

CenteredSpace CenteredSpace::discrete_topology(Universe u) {
  std::vector<SubsetCollection> nu;
  for (std::size_t x = 0; x < u.size(); ++x) {
    nu.push_back(principal_filter(SubsetMask::singleton(x), u));
  }
  return CenteredSpace(u, std::move(nu));
}

CenteredSpace CenteredSpace::indiscrete(Universe u) {
  return CenteredSpace(u, std::vector<SubsetCollection>(u.size(), {SubsetMask::full(u)}));
}

std::optional<CenteringViolation> find_centering_violation(const CenteredSpace& s) {
  for (std::size_t x = 0; x < s.universe().size(); ++x) {
    for (SubsetMask n : s.nu(x)) {
      if (!n.contains(x)) return CenteringViolation{x, n};
    }
  }
  return std::nullopt;
}

bool validate_space(const CenteredSpace& s) { return !find_centering_violation(s); }

void require_valid_space(const CenteredSpace& s) {
  if (auto v = find_centering_violation(s)) {
    throw InputError("point " + std::to_string(v->point) + " is not in its probe " +
                     to_string(v->set));
  }
}

std::string_view to_string(SpaceClass c) noexcept {
  switch (c) {
    case SpaceClass::Centered:
      return "Centered";
    case SpaceClass::Raster:
      return "Raster";
    case SpaceClass::Filterbase:
      return "Filterbase";
    case SpaceClass::PreTop:
      return "PreTop";
    case SpaceClass::Top:
      return "Top";
  }
  return "?";
}

std::optional<SpaceClass> parse_space_class(std::string_view name) noexcept {
  for (SpaceClass c : kAllSpaceClasses) {
    std::string_view canonical = to_string(c);
    if (name.size() == canonical.size() &&
        std::equal(name.begin(), name.end(), canonical.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return c;
    }
  }
  return std::nullopt;
}

bool belongs_to(const CenteredSpace& s, SpaceClass c) {
  if (!validate_space(s)) return false;
  switch (c) {
    case SpaceClass::Centered:
      return true;
    case SpaceClass::Raster:
      return all_points(s, CollectionKind::Raster);
    case SpaceClass::Filterbase:
      return all_points(s, CollectionKind::Filterbase);
    case SpaceClass::PreTop:
      return all_points(s, CollectionKind::Filter);
    case SpaceClass::Top:
      return all_points(s, CollectionKind::Filter) && is_topological(s);
  }
  return false;
}

SpaceClassification classify_space(const CenteredSpace& s) {
  require_valid_space(s);
  SpaceClassification out;
  out.raster = all_points(s, CollectionKind::Raster);
  out.filterbase = all_points(s, CollectionKind::Filterbase);
  out.pretop = out.raster && out.filterbase;
  out.top = out.pretop && is_topological(s);
  if (out.top) {
    out.most_specific = SpaceClass::Top;
  } else if (out.pretop) {
    out.most_specific = SpaceClass::PreTop;
  } else if (out.raster) {
    out.most_specific = SpaceClass::Raster;
  } else if (out.filterbase) {
    out.most_specific = SpaceClass::Filterbase;
  }
  return out;
}

SubsetCollection transport(const FiniteFunction& f, const SubsetCollection& p) {
  std::vector<SubsetMask> images;
  images.reserve(p.size());
  for (SubsetMask n : p) images.push_back(f.image(n));
  return SubsetCollection(std::move(images));
}

bool is_centered_at(const FiniteFunction& f, const CenteredSpace& src,
                    const CenteredSpace& dst, std::size_t x) {
  require_maps_between(f, src, dst);
  if (!src.universe().contains_point(x)) {
    throw InputError("point " + std::to_string(x) + " is outside the source space");
  }
  return finer(transport(f, src.nu(x)), dst.nu(f(x)));
}

std::optional<std::size_t> first_uncentered_point(const FiniteFunction& f,
                                                  const CenteredSpace& src,
                                                  const CenteredSpace& dst) {
  require_maps_between(f, src, dst);
  for (std::size_t x = 0; x < src.universe().size(); ++x) {
    if (!finer(transport(f, src.nu(x)), dst.nu(f(x)))) return x;
  }
  return std::nullopt;
}

bool is_centered(const FiniteFunction& f, const CenteredSpace& src, const CenteredSpace& dst) {
  return !first_uncentered_point(f, src, dst);
}

SubsetCollection open_sets(const CenteredSpace& s) {
  const Universe u = s.universe();
  std::vector<SubsetMask> open;
  for (std::uint64_t bits = 0; bits < u.subset_count(); ++bits) {
    const SubsetMask candidate(static_cast<std::uint32_t>(bits));
    const auto pts = candidate.points();
    if (std::all_of(pts.begin(), pts.end(),
                    [&](std::size_t x) { return s.nu(x).contains(candidate); })) {
      open.push_back(candidate);
    }
  }
  return SubsetCollection(std::move(open));
}

CenteredSpace neighborhood_space(Universe u, const SubsetCollection& open) {
  require_valid(open, u);
  std::vector<SubsetCollection> nu;
  for (std::size_t x = 0; x < u.size(); ++x) {
    std::vector<SubsetMask> around;
    for (SubsetMask o : open) {
      if (o.contains(x)) around.push_back(o);
    }
    nu.push_back(up_closure(SubsetCollection(std::move(around)), u));
  }
  return CenteredSpace(u, std::move(nu));
}

bool is_topological(const CenteredSpace& s) {
  for (std::size_t x = 0; x < s.universe().size(); ++x) {
    if (!has_kind(s.nu(x), s.universe(), CollectionKind::Filter)) {
      throw InputError("topological test needs filters, and the probes at point " +
                       std::to_string(x) + " are not one");
    }
  }
  return neighborhood_space(s.universe(), open_sets(s)) == s;
}

EventuallyPeriodicSequence::EventuallyPeriodicSequence(std::vector<std::size_t> prefix,
                                                       std::vector<std::size_t> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw InputError("sequence cycle must be nonempty");
}

std::size_t EventuallyPeriodicSequence::at(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return cycle_[(n - prefix_.size()) % cycle_.size()];
}

SubsetMask EventuallyPeriodicSequence::cycle_set() const { return SubsetMask::of(cycle_); }

void EventuallyPeriodicSequence::require_valid_in(Universe u) const {
  for (auto part : {std::span<const std::size_t>(prefix_), std::span<const std::size_t>(cycle_)}) {
    for (std::size_t x : part) {
      if (!u.contains_point(x)) {
        throw InputError("sequence point " + std::to_string(x) + " is outside a universe of " +
                         std::to_string(u.size()) + " points");
      }
    }
  }
}

bool converges(const CenteredSpace& s, const EventuallyPeriodicSequence& seq, std::size_t x) {
  seq.require_valid_in(s.universe());
  if (!s.universe().contains_point(x)) {
    throw InputError("point " + std::to_string(x) + " is outside the space");
  }
  const SubsetMask tail = seq.cycle_set();
  return std::all_of(s.nu(x).begin(), s.nu(x).end(),
                     [tail](SubsetMask n) { return tail.subset_of(n); });
}

std::vector<CenteredSpace> enumerate_spaces(Universe u, SpaceClass c, const Limits& limits) {
  limits.check();
  if (u.size() > limits.max_probe_points) {
    throw CapExceeded("enumerating spaces over " + std::to_string(u.size()) +
                      " points exceeds the cap of " + std::to_string(limits.max_probe_points) +
                      " points");
  }
  // Candidates at x: every collection of subsets that contain x.
  std::vector<std::vector<SubsetCollection>> candidates(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) {
    std::vector<SubsetMask> around;
    for (std::uint64_t bits = 0; bits < u.subset_count(); ++bits) {
      const SubsetMask a(static_cast<std::uint32_t>(bits));
      if (a.contains(x)) around.push_back(a);
    }
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << around.size()); ++code) {
      std::vector<SubsetMask> members;
      for (std::size_t i = 0; i < around.size(); ++i) {
        if ((code >> i) & 1u) members.push_back(around[i]);
      }
      candidates[x].emplace_back(std::move(members));
    }
  }
  std::vector<CenteredSpace> out;
  std::vector<std::size_t> pick(u.size(), 0);
  while (true) {
    std::vector<SubsetCollection> nu;
    for (std::size_t x = 0; x < u.size(); ++x) nu.push_back(candidates[x][pick[x]]);
    CenteredSpace s(u, std::move(nu));
    if (belongs_to(s, c)) out.push_back(std::move(s));
    std::size_t x = u.size();
    while (x-- > 0) {
      if (++pick[x] < candidates[x].size()) break;
      pick[x] = 0;
    }
    if (x == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace centeredkit
