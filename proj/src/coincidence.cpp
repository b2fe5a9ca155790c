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

#include "centeredkit/coincidence.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "centeredkit/error.hpp"

namespace centeredkit {

namespace {

void require_same_space(const FiniteFunction& f, const FiniteFunction& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
    throw InputError("functions " + to_string(f) + " and " + to_string(g) +
                     " do not share domain and codomain");
  }
}

void require_distinct_in(Universe codomain, std::initializer_list<std::size_t> ys) {
  for (auto i = ys.begin(); i != ys.end(); ++i) {
    if (!codomain.contains_point(*i)) {
      throw InputError("value " + std::to_string(*i) + " is outside a codomain of " +
                       std::to_string(codomain.size()) + " points");
    }
    for (auto j = std::next(i); j != ys.end(); ++j) {
      if (*i == *j) throw InputError("witness values must be pairwise distinct");
    }
  }
}

void require_subsets_in(Universe domain, SubsetMask a, SubsetMask b) {
  if (!domain.contains(a) || !domain.contains(b)) {
    throw InputError("witness subsets must lie inside the domain");
  }
}

}  // namespace

std::string_view to_string(RelationMode mode) noexcept {
  return mode == RelationMode::Exact ? "exact" : "weak";
}

std::string_view to_string(RelationProperty property) noexcept {
  switch (property) {
    case RelationProperty::Reflexive:
      return "reflexive";
    case RelationProperty::Symmetric:
      return "symmetric";
    case RelationProperty::Transitive:
      return "transitive";
  }
  return "?";
}

SubsetMask coincidence_set(const FiniteFunction& f, const FiniteFunction& g) {
  require_same_space(f, g);
  SubsetMask out;
  for (std::size_t x = 0; x < f.domain().size(); ++x) {
    if (f(x) == g(x)) out = out | SubsetMask::singleton(x);
  }
  return out;
}

bool related(const SubsetCollection& p, const FiniteFunction& f, const FiniteFunction& g) {
  require_valid(p, f.domain());
  return p.contains(coincidence_set(f, g));
}

bool weakly_related(const SubsetCollection& p, const FiniteFunction& f,
                    const FiniteFunction& g) {
  if (p.empty()) throw InputError("the weak relation needs a nonempty collection");
  require_valid(p, f.domain());
  const SubsetMask agree = coincidence_set(f, g);
  return std::any_of(p.begin(), p.end(), [agree](SubsetMask a) { return a.subset_of(agree); });
}

bool relates(RelationMode mode, const SubsetCollection& p, const FiniteFunction& f,
             const FiniteFunction& g) {
  return mode == RelationMode::Exact ? related(p, f, g) : weakly_related(p, f, g);
}

RelationReport analyze_relation(const SubsetCollection& p, Universe domain, Universe codomain,
                                RelationMode mode, const Limits& limits) {
  if (p.empty()) throw InputError("relation analysis needs a nonempty collection");
  require_valid(p, domain);
  limits.check();
  const std::vector<FiniteFunction> fs = all_functions(domain, codomain, limits.max_functions);
  const std::size_t k = fs.size();

  // The relation depends on {f=g} only, so one membership answer per subset
  // of the domain covers every pair.
  std::vector<char> holds_on(domain.subset_count(), 0);
  for (std::uint64_t bits = 0; bits < domain.subset_count(); ++bits) {
    const SubsetMask agree(static_cast<std::uint32_t>(bits));
    holds_on[bits] = mode == RelationMode::Exact
                         ? p.contains(agree)
                         : std::any_of(p.begin(), p.end(),
                                       [agree](SubsetMask a) { return a.subset_of(agree); });
  }
  std::vector<char> rel(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      rel[i * k + j] = holds_on[coincidence_set(fs[i], fs[j]).bits()];
    }
  }
  auto r = [&](std::size_t i, std::size_t j) { return rel[i * k + j] != 0; };

  RelationReport report;
  report.function_count = k;
  report.reflexive = true;
  report.symmetric = true;
  report.transitive = true;
  std::optional<Counterexample> reflexive_cx, symmetric_cx, transitive_cx;

  for (std::size_t i = 0; i < k && report.reflexive; ++i) {
    if (!r(i, i)) {
      report.reflexive = false;
      reflexive_cx = Counterexample{RelationProperty::Reflexive, {fs[i]}};
    }
  }
  for (std::size_t i = 0; i < k && report.symmetric; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (r(i, j) && !r(j, i)) {
        report.symmetric = false;
        symmetric_cx = Counterexample{RelationProperty::Symmetric, {fs[i], fs[j]}};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < k && report.transitive; ++i) {
    for (std::size_t j = 0; j < k && report.transitive; ++j) {
      if (!r(i, j)) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (r(j, l) && !r(i, l)) {
          report.transitive = false;
          transitive_cx = Counterexample{RelationProperty::Transitive, {fs[i], fs[j], fs[l]}};
          break;
        }
      }
    }
  }
  report.nontrivial = std::find(rel.begin(), rel.end(), 0) != rel.end();

  if (reflexive_cx) {
    report.counterexample = std::move(reflexive_cx);
  } else if (symmetric_cx) {
    report.counterexample = std::move(symmetric_cx);
  } else if (transitive_cx) {
    report.counterexample = std::move(transitive_cx);
  }
  return report;
}

WitnessTriple witness_triple_filter(SubsetMask a, SubsetMask b, Universe domain,
                                    Universe codomain, std::size_t y1, std::size_t y2,
                                    std::size_t y3) {
  require_distinct_in(codomain, {y1, y2, y3});
  require_subsets_in(domain, a, b);
  const SubsetMask both = a & b;
  const SubsetMask either = a | b;
  std::vector<std::size_t> f(domain.size()), g(domain.size()), h(domain.size());
  for (std::size_t x = 0; x < domain.size(); ++x) {
    f[x] = both.contains(x) ? y1 : either.contains(x) ? y2 : y3;
    g[x] = either.contains(x) ? y1 : y2;
    h[x] = (a - b).contains(x) ? y2 : y1;
  }
  return WitnessTriple{FiniteFunction(domain, codomain, std::move(f)),
                       FiniteFunction(domain, codomain, std::move(g)),
                       FiniteFunction(domain, codomain, std::move(h))};
}

WitnessTriple witness_triple_filterbase(SubsetMask a, SubsetMask b, Universe domain,
                                        Universe codomain, std::size_t y1, std::size_t y2) {
  require_distinct_in(codomain, {y1, y2});
  require_subsets_in(domain, a, b);
  std::vector<std::size_t> f(domain.size()), g(domain.size()), h(domain.size());
  for (std::size_t x = 0; x < domain.size(); ++x) {
    f[x] = b.contains(x) ? y1 : y2;
    g[x] = (a | b).contains(x) ? y1 : y2;
    h[x] = (b - a).contains(x) ? y2 : y1;
  }
  return WitnessTriple{FiniteFunction(domain, codomain, std::move(f)),
                       FiniteFunction(domain, codomain, std::move(g)),
                       FiniteFunction(domain, codomain, std::move(h))};
}

}  // namespace centeredkit
