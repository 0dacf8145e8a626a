#pragma once

// Symmetric group characters by the Murnaghan-Nakayama rule on beta-sets.
// Independent of the modular table construction; used as a test oracle.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Partition = std::vector<int>;

inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline long long mn_character(const Partition& shape, Partition cycle_type) {
  std::set<int> beta;
  const int len = static_cast<int>(shape.size());
  for (int i = 0; i < len; ++i) beta.insert(shape[i] + (len - 1 - i));
  std::map<std::pair<std::set<int>, Partition>, long long> memo;
  std::function<long long(const std::set<int>&, Partition&)> rec = [&](const std::set<int>& b, Partition& mu) -> long long {
    if (mu.empty()) return 1;
    auto key = std::make_pair(b, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu.back();
    mu.pop_back();
    long long total = 0;
    for (int x : b) {
      const int y = x - r;
      if (y < 0 || b.count(y)) continue;
      int between = 0;
      for (int z : b)
        if (z > y && z < x) ++between;
      std::set<int> nb = b;
      nb.erase(x);
      nb.insert(y);
      total += (between % 2 ? -1 : 1) * rec(nb, mu);
    }
    mu.push_back(r);
    memo[key] = total;
    return total;
  };
  return rec(beta, cycle_type);
}

}  // namespace oracle
