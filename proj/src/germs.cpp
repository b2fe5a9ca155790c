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

#include "centeredkit/germs.hpp"

#include <string>

#include "centeredkit/coincidence.hpp"
#include "centeredkit/error.hpp"

namespace centeredkit {

namespace {

void require_germ_preconditions(const CenteredSpace& space, std::size_t x,
                                const CenteredSpace& target) {
  require_valid_space(space);
  require_valid_space(target);
  if (!space.universe().contains_point(x)) {
    throw InputError("point " + std::to_string(x) + " is outside the space");
  }
  if (target.universe().size() < 2) {
    throw InputError("germs need a codomain of at least two points");
  }
  if (!has_kind(space.nu(x), space.universe(), CollectionKind::Filterbase)) {
    throw InputError("the probes at point " + std::to_string(x) + ", " +
                     to_string(space.nu(x)) +
                     ", do not form a filterbase, so functions have no germs there");
  }
}

}  // namespace

std::vector<FiniteFunction> centered_at_functions(const CenteredSpace& space, std::size_t x,
                                                  const CenteredSpace& target,
                                                  const Limits& limits) {
  std::vector<FiniteFunction> out;
  for (FiniteFunction& g :
       all_functions(space.universe(), target.universe(), limits.max_functions)) {
    if (is_centered_at(g, space, target, x)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<FiniteFunction> germ_class(const CenteredSpace& space, std::size_t x,
                                       const FiniteFunction& f, const CenteredSpace& target,
                                       const Limits& limits) {
  require_germ_preconditions(space, x, target);
  if (!is_centered_at(f, space, target, x)) {
    throw InputError("function " + to_string(f) + " is not centered at point " +
                     std::to_string(x));
  }
  std::vector<FiniteFunction> out;
  for (FiniteFunction& g : centered_at_functions(space, x, target, limits)) {
    if (weakly_related(space.nu(x), f, g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<FiniteFunction> germ_class(const CenteredSpace& space, std::size_t x,
                                       const FiniteFunction& f, Universe codomain,
                                       const Limits& limits) {
  return germ_class(space, x, f, CenteredSpace::discrete(codomain), limits);
}

std::vector<std::vector<FiniteFunction>> germ_partition(const CenteredSpace& space,
                                                        std::size_t x,
                                                        const CenteredSpace& target,
                                                        const Limits& limits) {
  require_germ_preconditions(space, x, target);
  const std::vector<FiniteFunction> domain = centered_at_functions(space, x, target, limits);
  std::vector<char> placed(domain.size(), 0);
  std::vector<std::vector<FiniteFunction>> classes;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (placed[i]) continue;
    std::vector<FiniteFunction> cls;
    for (std::size_t j = i; j < domain.size(); ++j) {
      if (!placed[j] && weakly_related(space.nu(x), domain[i], domain[j])) {
        placed[j] = 1;
        cls.push_back(domain[j]);
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace centeredkit
