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

// Centered spaces: a universe together with a collection nu(x) of subsets at
// every point x, each containing x. Morphisms are the maps f whose image
// system f(nu(x)) is finer than nu(f(x)) at every point.

#ifndef CENTEREDKIT_SPACES_HPP_
#define CENTEREDKIT_SPACES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "centeredkit/function.hpp"
#include "centeredkit/limits.hpp"
#include "centeredkit/setalgebra.hpp"

namespace centeredkit {

/// A universe with one collection per point. Construction checks only that
/// the table has one entry per point and that every subset lies in the
/// universe; the centering condition itself is checked by validate_space so
/// that invalid structures can still be represented and reported on.
class CenteredSpace {
 public:
  CenteredSpace(Universe u, std::vector<SubsetCollection> nu);

  /// nu(x) = {{x}}.
  static CenteredSpace discrete(Universe u);
  /// nu(x) = all supersets of {x}: the discrete topology.
  static CenteredSpace discrete_topology(Universe u);
  /// nu(x) = {X}.
  static CenteredSpace indiscrete(Universe u);

  Universe universe() const noexcept { return universe_; }
  const SubsetCollection& nu(std::size_t x) const { return nu_.at(x); }
  std::span<const SubsetCollection> structure() const noexcept { return nu_; }

  friend bool operator==(const CenteredSpace&, const CenteredSpace&) = default;

 private:
  Universe universe_;
  std::vector<SubsetCollection> nu_;
};

/// Applies `op` to every nu(x).
template <typename Op>
CenteredSpace map_structure(const CenteredSpace& s, Op op) {
  std::vector<SubsetCollection> nu;
  nu.reserve(s.universe().size());
  for (std::size_t x = 0; x < s.universe().size(); ++x) nu.push_back(op(x, s.nu(x)));
  return CenteredSpace(s.universe(), std::move(nu));
}

struct CenteringViolation {
  std::size_t point;
  SubsetMask set;
};

std::optional<CenteringViolation> find_centering_violation(const CenteredSpace& s);
bool validate_space(const CenteredSpace& s);
/// Throws InputError naming the first (x, N) with x not in N.
void require_valid_space(const CenteredSpace& s);

/// Ordered by the embeddings Top ⊂ PreTop ⊂ Raster, Filterbase ⊂ Centered.
enum class SpaceClass { Centered, Raster, Filterbase, PreTop, Top };

std::string_view to_string(SpaceClass c) noexcept;
std::optional<SpaceClass> parse_space_class(std::string_view name) noexcept;
inline constexpr SpaceClass kAllSpaceClasses[] = {SpaceClass::Centered, SpaceClass::Raster,
                                                  SpaceClass::Filterbase, SpaceClass::PreTop,
                                                  SpaceClass::Top};

/// Valid and every nu(x) nonempty and of the class's kind. Empty
/// collections are admitted in Centered only.
bool belongs_to(const CenteredSpace& s, SpaceClass c);

struct SpaceClassification {
  SpaceClass most_specific = SpaceClass::Centered;
  bool raster = false;
  bool filterbase = false;
  bool pretop = false;
  bool top = false;
};

/// Throws InputError for an invalid space.
SpaceClassification classify_space(const CenteredSpace& s);

/// {f(N) | N in p}.
SubsetCollection transport(const FiniteFunction& f, const SubsetCollection& p);

/// f(nu_src(x)) is finer than nu_dst(f(x)). Throws InputError when f does
/// not go from src's universe to dst's.
bool is_centered_at(const FiniteFunction& f, const CenteredSpace& src,
                    const CenteredSpace& dst, std::size_t x);
std::optional<std::size_t> first_uncentered_point(const FiniteFunction& f,
                                                  const CenteredSpace& src,
                                                  const CenteredSpace& dst);
bool is_centered(const FiniteFunction& f, const CenteredSpace& src, const CenteredSpace& dst);

/// {U | U in nu(x) for every x in U}. The empty set always qualifies.
SubsetCollection open_sets(const CenteredSpace& s);
/// nu(x) = {N | x in U ⊆ N for some U in open}.
CenteredSpace neighborhood_space(Universe u, const SubsetCollection& open);
/// Every nu(x) is a filter and the structure is regenerated unchanged from
/// its own open sets. Throws InputError if some nu(x) is not a filter.
bool is_topological(const CenteredSpace& s);

/// s_0 s_1 ... = prefix followed by the cycle repeated forever.
class EventuallyPeriodicSequence {
 public:
  /// Throws InputError on an empty cycle.
  EventuallyPeriodicSequence(std::vector<std::size_t> prefix, std::vector<std::size_t> cycle);

  static EventuallyPeriodicSequence constant(std::size_t x) { return {{}, {x}}; }

  std::span<const std::size_t> prefix() const noexcept { return prefix_; }
  std::span<const std::size_t> cycle() const noexcept { return cycle_; }
  std::size_t at(std::size_t n) const;
  SubsetMask cycle_set() const;
  /// Throws InputError if a point is outside u.
  void require_valid_in(Universe u) const;

  friend bool operator==(const EventuallyPeriodicSequence&,
                         const EventuallyPeriodicSequence&) = default;

 private:
  std::vector<std::size_t> prefix_;
  std::vector<std::size_t> cycle_;
};

/// Every N in nu(x) contains a tail {s_n | n >= k}.
///
/// Tails shrink as k grows, and from k = prefix length onwards every tail is
/// exactly the set of points on the cycle. A member N therefore contains some
/// tail iff it contains the cycle's point set, and the check is one subset
/// test per member. Defined for uncentered structures too, which is what
/// makes "every constant sequence converges" testable against centering.
/// Throws InputError for a sequence or point outside the universe.
bool converges(const CenteredSpace& s, const EventuallyPeriodicSequence& seq, std::size_t x);

/// Every structure on u whose nu(x) is drawn from the collections of subsets
/// containing x (the empty collection included), restricted to class c, in a
/// fixed order. Throws CapExceeded above limits.max_probe_points.
std::vector<CenteredSpace> enumerate_spaces(Universe u, SpaceClass c,
                                            const Limits& limits = Limits{});

}  // namespace centeredkit

#endif  // CENTEREDKIT_SPACES_HPP_
