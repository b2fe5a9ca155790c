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

// Subsets of a finite universe as bit patterns, collections of subsets, the
// three conditions defining rasters, filterbases and filters, and the two
// closure operators on collections.
//
// Points of a universe of size n are the indices 0..n-1. A subset is a
// bit pattern with bit i set iff point i belongs to it. A collection is a
// set of subsets kept sorted ascending by bit-pattern value without
// duplicates, so two collections are equal iff their member lists are.

#ifndef CENTEREDKIT_SETALGEBRA_HPP_
#define CENTEREDKIT_SETALGEBRA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centeredkit/limits.hpp"

namespace centeredkit {

inline constexpr std::size_t kMaxPoints = 16;

class SubsetMask;

/// A nonempty finite set {0, ..., size-1}.
class Universe {
 public:
  /// Throws InputError unless 1 <= size <= kMaxPoints.
  explicit Universe(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  std::uint64_t subset_count() const noexcept { return std::uint64_t{1} << size_; }
  std::uint32_t full_bits() const noexcept {
    return static_cast<std::uint32_t>(subset_count() - 1);
  }
  bool contains(SubsetMask a) const noexcept;
  bool contains_point(std::size_t x) const noexcept { return x < size_; }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::size_t size_;
};

class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  /// Throws InputError for a point >= kMaxPoints.
  static SubsetMask of(std::initializer_list<std::size_t> points);
  static SubsetMask of(std::span<const std::size_t> points);
  static SubsetMask singleton(std::size_t x);
  static SubsetMask full(Universe u) { return SubsetMask(u.full_bits()); }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(std::size_t x) const noexcept {
    return x < 32 && ((bits_ >> x) & 1u) != 0;
  }
  constexpr bool subset_of(SubsetMask other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  std::size_t count() const noexcept;
  std::vector<std::size_t> points() const;
  SubsetMask complement(Universe u) const noexcept {
    return SubsetMask(~bits_ & u.full_bits());
  }

  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept {
    return SubsetMask(a.bits_ & b.bits_);
  }
  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept {
    return SubsetMask(a.bits_ | b.bits_);
  }
  /// Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) noexcept {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// "{0, 2}" style rendering, used in diagnostics.
std::string to_string(SubsetMask a);

class SubsetCollection {
 public:
  using const_iterator = std::vector<SubsetMask>::const_iterator;

  SubsetCollection() = default;
  /// Sorts and deduplicates.
  explicit SubsetCollection(std::vector<SubsetMask> members);
  SubsetCollection(std::initializer_list<SubsetMask> members);

  /// Convenience for literals: of({{0, 1}, {1, 2}}).
  static SubsetCollection of(
      std::initializer_list<std::initializer_list<std::size_t>> members);

  std::span<const SubsetMask> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  bool contains(SubsetMask a) const noexcept;
  /// Member-wise inclusion of collections.
  bool subset_of(const SubsetCollection& other) const noexcept;
  /// Intersection of all members; requires a nonempty collection.
  SubsetMask intersection() const;
  SubsetCollection with(SubsetMask a) const;

  friend bool operator==(const SubsetCollection&, const SubsetCollection&) = default;
  friend auto operator<=>(const SubsetCollection&, const SubsetCollection&) = default;

 private:
  std::vector<SubsetMask> members_;
};

/// "{{0}, {0, 1}}" style rendering, used in diagnostics.
std::string to_string(const SubsetCollection& p);

bool valid_in(const SubsetCollection& p, Universe u) noexcept;
/// Throws InputError naming the first member with a point outside u.
void require_valid(const SubsetCollection& p, Universe u);

struct CollectionClass {
  bool is_raster = false;
  bool is_filterbase = false;
  bool is_filter = false;

  friend bool operator==(const CollectionClass&, const CollectionClass&) = default;
};

enum class CollectionKind { Raster, Filterbase, Filter };

/// Finite intersections are nonempty. On a finite collection this is the
/// same as the intersection of all members being nonempty, since the whole
/// family is one of its finite subfamilies and its intersection is contained
/// in every other one. Throws InputError on an empty collection.
bool satisfies_f0(const SubsetCollection& p, Universe u);
/// Upward closed in the subset lattice of u. Checking single-point
/// extensions suffices: every superset is reached by adding points one at
/// a time.
bool satisfies_f1(const SubsetCollection& p, Universe u);
/// Every pair of members has a member inside their intersection (non-strict
/// containment). Throws InputError on an empty collection.
bool satisfies_f2(const SubsetCollection& p);

/// raster = F0 and F1, filterbase = F0 and F2, filter = all three.
CollectionClass classify_collection(const SubsetCollection& p, Universe u);
bool has_kind(const SubsetCollection& p, Universe u, CollectionKind kind);

/// All supersets in u of some member.
SubsetCollection up_closure(const SubsetCollection& p, Universe u);
/// All intersections of nonempty finite subfamilies. The empty subfamily is
/// not used, so u itself is only present when some member is u.
SubsetCollection cap_closure(const SubsetCollection& p);
/// up_closure(cap_closure(p)). Throws InputError if p is empty or fails F0.
SubsetCollection generated_filter(const SubsetCollection& p, Universe u);

/// p1 is finer than p2: every member of p2 contains a member of p1. True
/// whenever p2 is empty.
bool finer(const SubsetCollection& p1, const SubsetCollection& p2) noexcept;

/// A filter such that whenever u is split into three disjoint (possibly
/// empty) parts, exactly one part is a member.
bool is_ultrafilter(const SubsetCollection& p, Universe u);
/// A filter containing exactly one of A and its complement, for every A.
bool is_ultrafilter_by_complement(const SubsetCollection& p, Universe u);

/// {B | a is a subset of B}. Throws InputError if a is empty.
SubsetCollection principal_filter(SubsetMask a, Universe u);

/// The collection with code bit k set iff the subset with bits k is a member.
SubsetCollection decode_collection(std::uint64_t code, Universe u);

/// Lazily walks every nonempty collection over a universe in increasing code
/// order, optionally keeping only those of one kind. Codes are disjoint
/// between ranges [lo, hi) so walks can be split across workers.
class CollectionEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SubsetCollection;
    using difference_type = std::ptrdiff_t;
    using pointer = const SubsetCollection*;
    using reference = const SubsetCollection&;

    iterator() = default;
    const SubsetCollection& operator*() const { return current_; }
    const SubsetCollection* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.code_ == b.code_;
    }

   private:
    friend class CollectionEnumeration;
    iterator(const CollectionEnumeration* owner, std::uint64_t code);
    void settle();

    const CollectionEnumeration* owner_ = nullptr;
    std::uint64_t code_ = 0;
    SubsetCollection current_;
  };

  iterator begin() const { return iterator(this, first_); }
  iterator end() const { return iterator(this, last_); }
  Universe universe() const noexcept { return universe_; }

 private:
  friend CollectionEnumeration enumerate_collections(Universe,
                                                     std::optional<CollectionKind>,
                                                     const Limits&);
  CollectionEnumeration(Universe u, std::optional<CollectionKind> kind,
                        std::uint64_t first, std::uint64_t last)
      : universe_(u), kind_(kind), first_(first), last_(last) {}

  Universe universe_;
  std::optional<CollectionKind> kind_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// Throws CapExceeded if u is larger than limits.max_enum_points.
CollectionEnumeration enumerate_collections(
    Universe u, std::optional<CollectionKind> kind = std::nullopt,
    const Limits& limits = Limits{});

/// Eager variant of enumerate_collections.
std::vector<SubsetCollection> all_collections(
    Universe u, std::optional<CollectionKind> kind = std::nullopt,
    const Limits& limits = Limits{});

}  // namespace centeredkit

#endif  // CENTEREDKIT_SETALGEBRA_HPP_
