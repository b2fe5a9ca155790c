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

#include "centeredkit/setalgebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "centeredkit/error.hpp"

namespace centeredkit {

namespace {

void require_nonempty(const SubsetCollection& p, const char* what) {
  if (p.empty()) {
    throw InputError(std::string(what) + " is defined for nonempty collections only");
  }
}

}  // namespace

Universe::Universe(std::size_t size) : size_(size) {
  if (size == 0 || size > kMaxPoints) {
    throw InputError("universe size must be between 1 and " +
                     std::to_string(kMaxPoints) + ", got " + std::to_string(size));
  }
}

bool Universe::contains(SubsetMask a) const noexcept {
  return (a.bits() & ~full_bits()) == 0;
}

SubsetMask SubsetMask::of(std::span<const std::size_t> points) {
  std::uint32_t bits = 0;
  for (std::size_t x : points) bits |= singleton(x).bits();
  return SubsetMask(bits);
}

SubsetMask SubsetMask::of(std::initializer_list<std::size_t> points) {
  return of(std::span<const std::size_t>(points.begin(), points.size()));
}

SubsetMask SubsetMask::singleton(std::size_t x) {
  if (x >= kMaxPoints) {
    throw InputError("point index " + std::to_string(x) + " is out of range");
  }
  return SubsetMask(std::uint32_t{1} << x);
}

std::size_t SubsetMask::count() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::size_t> SubsetMask::points() const {
  std::vector<std::size_t> out;
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::string to_string(SubsetMask a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t x : a.points()) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

SubsetCollection::SubsetCollection(std::vector<SubsetMask> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SubsetCollection::SubsetCollection(std::initializer_list<SubsetMask> members)
    : SubsetCollection(std::vector<SubsetMask>(members)) {}

SubsetCollection SubsetCollection::of(
    std::initializer_list<std::initializer_list<std::size_t>> members) {
  std::vector<SubsetMask> masks;
  masks.reserve(members.size());
  for (const auto& m : members) masks.push_back(SubsetMask::of(m));
  return SubsetCollection(std::move(masks));
}

bool SubsetCollection::contains(SubsetMask a) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool SubsetCollection::subset_of(const SubsetCollection& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

SubsetMask SubsetCollection::intersection() const {
  require_nonempty(*this, "intersection");
  SubsetMask acc = members_.front();
  for (SubsetMask a : members_) acc = acc & a;
  return acc;
}

SubsetCollection SubsetCollection::with(SubsetMask a) const {
  std::vector<SubsetMask> next = members_;
  next.push_back(a);
  return SubsetCollection(std::move(next));
}

std::string to_string(const SubsetCollection& p) {
  std::string out = "{";
  bool first = true;
  for (SubsetMask a : p) {
    if (!first) out += ", ";
    out += to_string(a);
    first = false;
  }
  return out + "}";
}

bool valid_in(const SubsetCollection& p, Universe u) noexcept {
  return std::all_of(p.begin(), p.end(), [u](SubsetMask a) { return u.contains(a); });
}

void require_valid(const SubsetCollection& p, Universe u) {
  for (SubsetMask a : p) {
    if (!u.contains(a)) {
      throw InputError("subset " + to_string(a) + " has points outside a universe of " +
                       std::to_string(u.size()) + " points");
    }
  }
}

bool satisfies_f0(const SubsetCollection& p, Universe u) {
  require_nonempty(p, "condition F0");
  require_valid(p, u);
  return !p.intersection().empty();
}

bool satisfies_f1(const SubsetCollection& p, Universe u) {
  require_valid(p, u);
  for (SubsetMask a : p) {
    for (std::size_t x = 0; x < u.size(); ++x) {
      if (!a.contains(x) && !p.contains(a | SubsetMask::singleton(x))) return false;
    }
  }
  return true;
}

bool satisfies_f2(const SubsetCollection& p) {
  require_nonempty(p, "condition F2");
  const auto members = p.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const SubsetMask meet = members[i] & members[j];
      if (p.contains(meet)) continue;
      const bool found = std::any_of(members.begin(), members.end(),
                                     [meet](SubsetMask c) { return c.subset_of(meet); });
      if (!found) return false;
    }
  }
  return true;
}

CollectionClass classify_collection(const SubsetCollection& p, Universe u) {
  const bool f0 = satisfies_f0(p, u);
  const bool f1 = satisfies_f1(p, u);
  const bool f2 = satisfies_f2(p);
  return CollectionClass{f0 && f1, f0 && f2, f0 && f1 && f2};
}

bool has_kind(const SubsetCollection& p, Universe u, CollectionKind kind) {
  if (p.empty()) return false;
  const CollectionClass c = classify_collection(p, u);
  switch (kind) {
    case CollectionKind::Raster:
      return c.is_raster;
    case CollectionKind::Filterbase:
      return c.is_filterbase;
    case CollectionKind::Filter:
      return c.is_filter;
  }
  return false;
}

SubsetCollection up_closure(const SubsetCollection& p, Universe u) {
  require_valid(p, u);
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 0; bits < u.subset_count(); ++bits) {
    const SubsetMask candidate(static_cast<std::uint32_t>(bits));
    if (std::any_of(p.begin(), p.end(),
                    [candidate](SubsetMask a) { return a.subset_of(candidate); })) {
      out.push_back(candidate);
    }
  }
  return SubsetCollection(std::move(out));
}

SubsetCollection cap_closure(const SubsetCollection& p) {
  // Every intersection of a nonempty subfamily is reached by intersecting
  // one more member at a time, so closing the worklist under pairwise
  // intersection with the original members is enough.
  std::vector<SubsetMask> closed(p.begin(), p.end());
  for (std::size_t next = 0; next < closed.size(); ++next) {
    for (SubsetMask a : p) {
      const SubsetMask meet = closed[next] & a;
      if (std::find(closed.begin(), closed.end(), meet) == closed.end()) {
        closed.push_back(meet);
      }
    }
  }
  return SubsetCollection(std::move(closed));
}

SubsetCollection generated_filter(const SubsetCollection& p, Universe u) {
  if (!satisfies_f0(p, u)) {
    throw InputError("collection " + to_string(p) +
                     " fails F0; the filter it generates would contain the empty set");
  }
  return up_closure(cap_closure(p), u);
}

bool finer(const SubsetCollection& p1, const SubsetCollection& p2) noexcept {
  return std::all_of(p2.begin(), p2.end(), [&p1](SubsetMask n) {
    return std::any_of(p1.begin(), p1.end(), [n](SubsetMask m) { return m.subset_of(n); });
  });
}

bool is_ultrafilter(const SubsetCollection& p, Universe u) {
  if (p.empty() || !classify_collection(p, u).is_filter) return false;
  // Walk every assignment of points to parts 0, 1, 2 as a base-3 counter.
  std::vector<unsigned> part(u.size(), 0);
  while (true) {
    SubsetMask parts[3];
    for (std::size_t x = 0; x < u.size(); ++x) {
      parts[part[x]] = parts[part[x]] | SubsetMask::singleton(x);
    }
    const int hits = static_cast<int>(p.contains(parts[0])) +
                     static_cast<int>(p.contains(parts[1])) +
                     static_cast<int>(p.contains(parts[2]));
    if (hits != 1) return false;
    std::size_t x = 0;
    while (x < u.size() && part[x] == 2) part[x++] = 0;
    if (x == u.size()) break;
    ++part[x];
  }
  return true;
}

bool is_ultrafilter_by_complement(const SubsetCollection& p, Universe u) {
  if (p.empty() || !classify_collection(p, u).is_filter) return false;
  for (std::uint64_t bits = 0; bits < u.subset_count(); ++bits) {
    const SubsetMask a(static_cast<std::uint32_t>(bits));
    if (p.contains(a) == p.contains(a.complement(u))) return false;
  }
  return true;
}

SubsetCollection principal_filter(SubsetMask a, Universe u) {
  if (a.empty()) throw InputError("principal filter of the empty set");
  if (!u.contains(a)) {
    throw InputError("subset " + to_string(a) + " is outside the universe");
  }
  return up_closure(SubsetCollection{a}, u);
}

SubsetCollection decode_collection(std::uint64_t code, Universe u) {
  std::vector<SubsetMask> members;
  for (std::uint64_t bits = 0; bits < u.subset_count() && bits < 64; ++bits) {
    if ((code >> bits) & 1u) members.emplace_back(static_cast<std::uint32_t>(bits));
  }
  return SubsetCollection(std::move(members));
}

CollectionEnumeration::iterator::iterator(const CollectionEnumeration* owner,
                                          std::uint64_t code)
    : owner_(owner), code_(code) {
  settle();
}

void CollectionEnumeration::iterator::settle() {
  while (code_ < owner_->last_) {
    current_ = decode_collection(code_, owner_->universe_);
    if (!owner_->kind_ || has_kind(current_, owner_->universe_, *owner_->kind_)) return;
    ++code_;
  }
}

CollectionEnumeration::iterator& CollectionEnumeration::iterator::operator++() {
  ++code_;
  settle();
  return *this;
}

CollectionEnumeration enumerate_collections(Universe u, std::optional<CollectionKind> kind,
                                            const Limits& limits) {
  limits.check();
  if (u.size() > limits.max_enum_points) {
    throw CapExceeded("enumerating collections over " + std::to_string(u.size()) +
                      " points exceeds the cap of " +
                      std::to_string(limits.max_enum_points) + " points");
  }
  // 2^(2^n) codes; at the hard limit n = 5 this is exactly 2^32.
  const std::uint64_t last = std::uint64_t{1} << u.subset_count();
  return CollectionEnumeration(u, kind, 1, last);
}

std::vector<SubsetCollection> all_collections(Universe u, std::optional<CollectionKind> kind,
                                              const Limits& limits) {
  std::vector<SubsetCollection> out;
  for (const SubsetCollection& p : enumerate_collections(u, kind, limits)) out.push_back(p);
  return out;
}

}  // namespace centeredkit
