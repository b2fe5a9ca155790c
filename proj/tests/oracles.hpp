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

// Brute-force reference implementations for the tests. They work on plain
// std::set representations and enumerate definitions literally (all
// subfamilies, all supersets, all triples) so that they share no code path
// with the bitmask library they check.

#ifndef CENTEREDKIT_TESTS_ORACLES_HPP_
#define CENTEREDKIT_TESTS_ORACLES_HPP_

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "centeredkit/setalgebra.hpp"

namespace oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

inline Set to_set(centeredkit::SubsetMask a) {
  Set out;
  for (std::size_t x : a.points()) out.insert(static_cast<int>(x));
  return out;
}

inline Family to_family(const centeredkit::SubsetCollection& p) {
  Family out;
  for (auto a : p) out.insert(to_set(a));
  return out;
}

inline std::vector<Set> powerset(int n) {
  std::vector<Set> out{Set{}};
  for (int x = 0; x < n; ++x) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) {
      Set s = out[i];
      s.insert(x);
      out.push_back(s);
    }
  }
  return out;
}

inline bool includes(const Set& big, const Set& small) {
  for (int x : small) {
    if (!big.count(x)) return false;
  }
  return true;
}

inline Set meet(const Set& a, const Set& b) {
  Set out;
  for (int x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

/// Calls visit with the intersection of every nonempty subfamily.
inline void for_each_subfamily_meet(const Family& p, const std::function<void(const Set&)>& visit) {
  const std::vector<Set> members(p.begin(), p.end());
  const std::size_t m = members.size();
  for (std::size_t code = 1; code < (std::size_t{1} << m); ++code) {
    bool first = true;
    Set acc;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((code >> i) & 1u)) continue;
      acc = first ? members[i] : meet(acc, members[i]);
      first = false;
    }
    visit(acc);
  }
}

inline bool f0(const Family& p) {
  bool ok = true;
  for_each_subfamily_meet(p, [&](const Set& s) { ok = ok && !s.empty(); });
  return ok;
}

inline bool f1(const Family& p, int n) {
  for (const Set& a : p) {
    for (const Set& b : powerset(n)) {
      if (includes(b, a) && !p.count(b)) return false;
    }
  }
  return true;
}

inline bool f2(const Family& p) {
  for (const Set& a : p) {
    for (const Set& b : p) {
      const Set ab = meet(a, b);
      bool found = false;
      for (const Set& c : p) found = found || includes(ab, c);
      if (!found) return false;
    }
  }
  return true;
}

inline Family up(const Family& p, int n) {
  Family out;
  for (const Set& b : powerset(n)) {
    for (const Set& a : p) {
      if (includes(b, a)) out.insert(b);
    }
  }
  return out;
}

inline Family cap(const Family& p) {
  Family out;
  for_each_subfamily_meet(p, [&](const Set& s) { out.insert(s); });
  return out;
}

inline bool finer(const Family& p1, const Family& p2) {
  for (const Set& n : p2) {
    bool found = false;
    for (const Set& m : p1) found = found || includes(n, m);
    if (!found) return false;
  }
  return true;
}

/// On a finite set every ultrafilter is the principal filter of a point.
inline bool ultrafilter(const Family& p, int n) {
  for (int x = 0; x < n; ++x) {
    Family principal;
    for (const Set& b : powerset(n)) {
      if (b.count(x)) principal.insert(b);
    }
    if (p == principal) return true;
  }
  return false;
}

using Table = std::vector<int>;

inline std::vector<Table> functions(int n, int m) {
  std::vector<Table> out{Table{}};
  for (int pos = 0; pos < n; ++pos) {
    std::vector<Table> next;
    for (const Table& t : out) {
      for (int v = 0; v < m; ++v) {
        Table u = t;
        u.push_back(v);
        next.push_back(u);
      }
    }
    out = next;
  }
  return out;
}

inline Set agree(const Table& f, const Table& g) {
  Set out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] == g[x]) out.insert(static_cast<int>(x));
  }
  return out;
}

/// Whether the exact (weak = false) or weak relation of p on m^n is an
/// equivalence with at least one unrelated pair.
inline bool nontrivial_equivalence(const Family& p, int n, int m, bool weak) {
  const std::vector<Table> fs = functions(n, m);
  auto rel = [&](const Table& f, const Table& g) {
    const Set c = agree(f, g);
    if (!weak) return p.count(c) > 0;
    for (const Set& a : p) {
      if (includes(c, a)) return true;
    }
    return false;
  };
  bool some_unrelated = false;
  for (const Table& f : fs) {
    if (!rel(f, f)) return false;
    for (const Table& g : fs) {
      if (rel(f, g) != rel(g, f)) return false;
      if (!rel(f, g)) {
        some_unrelated = true;
        continue;
      }
      for (const Table& h : fs) {
        if (rel(g, h) && !rel(f, h)) return false;
      }
    }
  }
  return some_unrelated;
}

/// Every topology on n points, as a family of open sets.
inline std::vector<Family> topologies(int n) {
  const std::vector<Set> all = powerset(n);
  std::vector<Family> out;
  const std::size_t k = all.size();
  for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
    Family t;
    for (std::size_t i = 0; i < k; ++i) {
      if ((code >> i) & 1u) t.insert(all[i]);
    }
    if (!t.count(Set{}) || !t.count(all.back())) continue;
    bool closed = true;
    for (const Set& a : t) {
      for (const Set& b : t) {
        Set u = a;
        u.insert(b.begin(), b.end());
        closed = closed && t.count(u) && t.count(meet(a, b));
      }
    }
    if (closed) out.push_back(t);
  }
  return out;
}

/// Neighborhoods of x in topology t.
inline Family neighborhoods(const Family& t, int n, int x) {
  Family out;
  for (const Set& nb : powerset(n)) {
    for (const Set& o : t) {
      if (o.count(x) && includes(nb, o)) out.insert(nb);
    }
  }
  return out;
}

/// Every N in nu_x contains {s_j | j >= k} for some k, with tails listed up
/// to index prefix + cycle (after that they repeat).
inline bool converges_by_tails(const std::vector<Set>& nu_x, const std::vector<int>& prefix,
                               const std::vector<int>& cycle) {
  const std::size_t horizon = prefix.size() + cycle.size();
  auto at = [&](std::size_t j) {
    return j < prefix.size() ? prefix[j] : cycle[(j - prefix.size()) % cycle.size()];
  };
  for (const Set& n : nu_x) {
    bool some_tail = false;
    for (std::size_t k = 0; k <= horizon && !some_tail; ++k) {
      Set tail;
      for (std::size_t j = k; j < k + horizon + cycle.size(); ++j) tail.insert(at(j));
      some_tail = includes(n, tail);
    }
    if (!some_tail) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // CENTEREDKIT_TESTS_ORACLES_HPP_
