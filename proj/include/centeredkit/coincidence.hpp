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

// Relations on a function space Y^X induced by a collection of subsets of X.
//
//   exact:  f ~ g  iff  {f = g} is a member of P
//   weak:   f ~ g  iff  some member of P is contained in {f = g}
//
// The exact relation is a nontrivial equivalence precisely for filters once
// |Y| >= 3; the weak relation precisely for filterbases once |Y| >= 2. The
// witness triples below are the functions that realize any pair of subsets
// A, B as coincidence sets, which is how the converse directions go through.

#ifndef CENTEREDKIT_COINCIDENCE_HPP_
#define CENTEREDKIT_COINCIDENCE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "centeredkit/function.hpp"
#include "centeredkit/limits.hpp"
#include "centeredkit/setalgebra.hpp"

namespace centeredkit {

enum class RelationMode { Exact, Weak };

std::string_view to_string(RelationMode mode) noexcept;

/// {x | f(x) = g(x)}. Throws InputError unless f and g share domain and
/// codomain.
SubsetMask coincidence_set(const FiniteFunction& f, const FiniteFunction& g);

bool related(const SubsetCollection& p, const FiniteFunction& f, const FiniteFunction& g);
/// Throws InputError on an empty collection.
bool weakly_related(const SubsetCollection& p, const FiniteFunction& f,
                    const FiniteFunction& g);
bool relates(RelationMode mode, const SubsetCollection& p, const FiniteFunction& f,
             const FiniteFunction& g);

enum class RelationProperty { Reflexive, Symmetric, Transitive };

std::string_view to_string(RelationProperty property) noexcept;

/// The lexicographically first violation of the named property: one
/// function for reflexivity, an ordered pair (f, g) with f~g but not g~f,
/// or a triple (f, g, h) with f~g, g~h but not f~h.
struct Counterexample {
  RelationProperty property;
  std::vector<FiniteFunction> functions;
};

struct RelationReport {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  /// Some pair of functions is unrelated.
  bool nontrivial = false;
  /// Present iff one of reflexive, symmetric, transitive fails; reports the
  /// first failing property in that order. A trivial relation relates every
  /// pair and has no finite witness, so nontriviality never fills this in.
  std::optional<Counterexample> counterexample;
  std::size_t function_count = 0;

  bool is_equivalence() const noexcept { return reflexive && symmetric && transitive; }
  bool is_nontrivial_equivalence() const noexcept { return is_equivalence() && nontrivial; }
};

/// Exhaustive check over all of codomain^domain. Throws CapExceeded when the
/// function space is larger than limits.max_functions, InputError when p is
/// empty or has points outside domain.
RelationReport analyze_relation(const SubsetCollection& p, Universe domain, Universe codomain,
                                RelationMode mode, const Limits& limits = Limits{});

struct WitnessTriple {
  FiniteFunction f;
  FiniteFunction g;
  FiniteFunction h;
};

/// With y1, y2, y3 pairwise distinct:
///   f = y1 on A∩B, y2 on (A∪B)\(A∩B), y3 elsewhere
///   g = y1 on A∪B, y2 elsewhere
///   h = y2 on A\B, y1 elsewhere
/// so that {f=h} = A, {h=g} = B and {f=g} = A∩B.
WitnessTriple witness_triple_filter(SubsetMask a, SubsetMask b, Universe domain,
                                    Universe codomain, std::size_t y1, std::size_t y2,
                                    std::size_t y3);

/// With y1 != y2:
///   f = y1 on B, y2 elsewhere
///   g = y1 on A∪B, y2 elsewhere
///   h = y2 on B\A, y1 elsewhere
/// so that {g=h} = A, B ⊆ {f=g} and {f=h} = A∩B.
WitnessTriple witness_triple_filterbase(SubsetMask a, SubsetMask b, Universe domain,
                                        Universe codomain, std::size_t y1, std::size_t y2);

}  // namespace centeredkit

#endif  // CENTEREDKIT_COINCIDENCE_HPP_
