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

#ifndef CENTEREDKIT_GERMS_HPP_
#define CENTEREDKIT_GERMS_HPP_

#include <cstddef>
#include <vector>

#include "centeredkit/function.hpp"
#include "centeredkit/limits.hpp"
#include "centeredkit/spaces.hpp"

namespace centeredkit {

/// C_x(X, Y): every function from `space` into `target` that is centered at
/// x, in lexicographic order. Throws CapExceeded above limits.max_functions.
std::vector<FiniteFunction> centered_at_functions(const CenteredSpace& space, std::size_t x,
                                                  const CenteredSpace& target,
                                                  const Limits& limits = Limits{});

/// The germ of f at x: every g in C_x(X, Y) agreeing with f on some member
/// of nu(x).
///
/// Refuses with InputError when nu(x) is not a filterbase (the relation is
/// then not an equivalence for |Y| >= 2, so germs are not defined), when f is
/// not centered at x, or when the target has fewer than two points.
std::vector<FiniteFunction> germ_class(const CenteredSpace& space, std::size_t x,
                                       const FiniteFunction& f, const CenteredSpace& target,
                                       const Limits& limits = Limits{});

/// Same, into the discrete structure nu(y) = {{y}} on `codomain`.
std::vector<FiniteFunction> germ_class(const CenteredSpace& space, std::size_t x,
                                       const FiniteFunction& f, Universe codomain,
                                       const Limits& limits = Limits{});

/// The germ classes at x, each sorted, ordered by their least element.
std::vector<std::vector<FiniteFunction>> germ_partition(const CenteredSpace& space,
                                                        std::size_t x,
                                                        const CenteredSpace& target,
                                                        const Limits& limits = Limits{});

}  // namespace centeredkit

#endif  // CENTEREDKIT_GERMS_HPP_
