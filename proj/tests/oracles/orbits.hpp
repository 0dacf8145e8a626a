#pragma once

// Naive orbit counting on generating tuples: explicit sets and BFS.

#include <functional>
#include <set>
#include <vector>

#include "cgw/group.hpp"

namespace oracle {

using Tuple = std::vector<cgw::Elem>;

inline std::set<Tuple> generating_tuples(const cgw::Group& g, std::size_t k) {
  std::set<Tuple> out;
  Tuple t(k, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == k) {
      if (cgw::subgroup_closure(g, t).size() == g.order()) out.insert(t);
      return;
    }
    for (cgw::Elem x = 0; x < g.order(); ++x) {
      t[pos] = x;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

// Neighbors: gi -> gi gj^e, gi -> gj^e gi, and optionally swaps, inverses and
// coordinatewise maps.
inline std::vector<Tuple> neighbors(const cgw::Group& g, const Tuple& t, bool extended,
                                    const std::vector<std::vector<cgw::Elem>>& maps) {
  std::vector<Tuple> out;
  const std::size_t k = t.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      for (cgw::Elem y : {t[j], g.inv(t[j])}) {
        Tuple r = t, l = t;
        r[i] = g.mul(t[i], y);
        l[i] = g.mul(y, t[i]);
        out.push_back(r);
        out.push_back(l);
      }
      if (extended) {
        Tuple s = t;
        std::swap(s[i], s[j]);
        out.push_back(s);
      }
    }
  if (extended)
    for (std::size_t i = 0; i < k; ++i) {
      Tuple s = t;
      s[i] = g.inv(s[i]);
      out.push_back(s);
    }
  for (const auto& m : maps) {
    Tuple s = t;
    for (auto& x : s) x = m[x];
    out.push_back(s);
  }
  return out;
}

inline std::vector<std::set<Tuple>> orbits(const cgw::Group& g, const std::set<Tuple>& vertices, bool extended,
                                           const std::vector<std::vector<cgw::Elem>>& maps = {}) {
  std::vector<std::set<Tuple>> out;
  std::set<Tuple> seen;
  for (const auto& start : vertices) {
    if (seen.count(start)) continue;
    std::set<Tuple> orbit{start};
    std::vector<Tuple> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      Tuple t = queue.back();
      queue.pop_back();
      for (auto& u : neighbors(g, t, extended, maps))
        if (seen.insert(u).second) {
          orbit.insert(u);
          queue.push_back(u);
        }
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace oracle
