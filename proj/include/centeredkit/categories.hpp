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

// The five concrete categories Centered, Raster, Filterbase, PreTop and Top
// seen as structure classes on finite sets, with their initial structures,
// the concrete reflections and coreflections between them, the fiber
// preorder, and canonical representatives for the two amnestic
// modifications (PreTop of Filterbase, Raster of Centered).
//
// Each universal property is checked by brute force: every probe space and
// every function between tiny universes is tried.

#ifndef CENTEREDKIT_CATEGORIES_HPP_
#define CENTEREDKIT_CATEGORIES_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centeredkit/function.hpp"
#include "centeredkit/limits.hpp"
#include "centeredkit/spaces.hpp"

namespace centeredkit {

struct ConeLeg {
  CenteredSpace space;
  FiniteFunction map;
};

/// A set with a family of maps into spaces.
class Cone {
 public:
  /// Throws InputError unless every map goes from apex into its leg's space.
  Cone(Universe apex, std::vector<ConeLeg> legs);

  Universe apex() const noexcept { return apex_; }
  std::span<const ConeLeg> legs() const noexcept { return legs_; }

 private:
  Universe apex_;
  std::vector<ConeLeg> legs_;
};

/// The result of a brute-force universal-property check: passed, or the
/// first failure found, described.
struct CheckResult {
  bool passed = true;
  std::string failure;

  static CheckResult ok() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return passed; }
};

/// The coarsest structure of class `category` on the apex making every leg
/// a morphism. At x it is built from P = {f_i^-1(N) | N in nu_i(f_i(x))}:
///   Centered: P;  Filterbase: cap_closure(P);  Raster: up_closure(P);
///   PreTop and Top: up_closure(cap_closure(P)).
/// A cone without legs yields empty collections in Centered and {X} in the
/// other classes. Throws InputError if a leg's space is outside `category`.
CenteredSpace initial_structure(const Cone& cone, SpaceClass category);

/// (a) every leg is a morphism out of `candidate`, and (b) for every probe
/// Z and every g: Z -> apex, g is a morphism into `candidate` iff every
/// leg∘g is a morphism. Also requires `candidate` to lie in `category`.
/// Throws CapExceeded if the apex or a probe is above
/// limits.max_probe_points.
CheckResult verify_initial(const Cone& cone, const CenteredSpace& candidate,
                           SpaceClass category, std::span<const CenteredSpace> probes,
                           const Limits& limits = Limits{});

/// `candidate` with {x} added at the first point x where nothing in nu(x)
/// lies inside {x}, closed again in `category`. The result is strictly finer
/// in the fiber preorder. Nothing is returned when every nu(x) already
/// reaches {x}, since no structure in the fiber is strictly finer then.
std::optional<CenteredSpace> refine_with_singleton(const CenteredSpace& candidate,
                                                   SpaceClass category);

/// Reflective arrows: PreTop -> Top, Filterbase -> PreTop, Centered -> Raster.
bool supports_reflection(SpaceClass from, SpaceClass into) noexcept;
/// Coreflective arrows: Centered -> Filterbase, Raster -> PreTop,
/// Filterbase -> PreTop, Centered -> Raster.
bool supports_coreflection(SpaceClass from, SpaceClass into) noexcept;

/// The reflection of s (in class `from`) into the subcategory `into`; the
/// identity s -> result is the universal arrow.
///   PreTop -> Top: neighborhood space of the open sets of s.
///   Filterbase -> PreTop, Centered -> Raster: nu(x) up-closed.
/// Centered -> Raster has no reflection for a space with an empty nu(x):
/// the identity into any raster structure fails at x. Such input, an
/// unsupported arrow, or s outside `from`, throws InputError.
CenteredSpace reflect(const CenteredSpace& s, SpaceClass from, SpaceClass into);

/// The coreflection of s into `into`; the identity result -> s is the
/// universal arrow.
///   Centered -> Filterbase, Raster -> PreTop: nu(x) cap-closed.
///   Filterbase -> PreTop, Centered -> Raster: nu(x) up-closed.
/// An empty nu(x) coreflects to {X}.
CenteredSpace coreflect(const CenteredSpace& s, SpaceClass from, SpaceClass into);

/// The identity s -> reflected is a morphism, `reflected` lies in `into`, and
/// every morphism from s to a probe (all assumed in `into`) is also a
/// morphism out of `reflected`.
CheckResult verify_reflection(const CenteredSpace& s, const CenteredSpace& reflected,
                              SpaceClass into, std::span<const CenteredSpace> probes,
                              const Limits& limits = Limits{});

/// Dual of verify_reflection: identity coreflected -> s, and every morphism
/// from a probe into s is also a morphism into `coreflected`.
CheckResult verify_coreflection(const CenteredSpace& s, const CenteredSpace& coreflected,
                                SpaceClass into, std::span<const CenteredSpace> probes,
                                const Limits& limits = Limits{});

struct FiberComparison {
  bool leq = false;  // identity s1 -> s2 is a morphism
  bool geq = false;  // identity s2 -> s1 is a morphism

  bool equivalent() const noexcept { return leq && geq; }
  friend bool operator==(const FiberComparison&, const FiberComparison&) = default;
};

/// Throws InputError unless both spaces share their universe.
FiberComparison fiber_compare(const CenteredSpace& s1, const CenteredSpace& s2);

/// Both identities are morphisms.
bool is_fiber_isomorphism(const CenteredSpace& s1, const CenteredSpace& s2);

/// The unique member of s's fiber-equivalence class in `target`, which is
/// nu(x) up-closed at every point. Accepts Filterbase spaces for target
/// PreTop and Centered spaces without empty collections for target Raster;
/// anything else throws InputError.
CenteredSpace amnestic_representative(const CenteredSpace& s, SpaceClass target);

}  // namespace centeredkit

#endif  // CENTEREDKIT_CATEGORIES_HPP_
