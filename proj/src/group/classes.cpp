#include "cgw/classes.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "cgw/error.hpp"

namespace cgw {

std::uint32_t ClassData::power_map(std::uint32_t t, std::int64_t s) const {
  const std::int64_t o = classes[t].element_order;
  std::int64_t r = s % o;
  if (r < 0) r += o;
  return power_class[t][static_cast<std::size_t>(r)];
}

ClassData conjugacy_classes(const Group& group) {
  const std::size_t n = group.order();
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> raw_class(n, kUnset);
  std::vector<Elem> conjugator(n, 0);
  std::vector<Elem> reps;
  std::vector<std::vector<Elem>> members;

  std::vector<Elem> conj_by;  // conjugating elements: generators
  for (Elem s : group.generators()) conj_by.push_back(s);

  for (Elem g = 0; g < n; ++g) {
    if (raw_class[g] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g);
    std::vector<Elem> orbit{g};
    raw_class[g] = id;
    conjugator[g] = group.identity();
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Elem x = orbit[head];
      for (Elem s : conj_by) {
        const Elem y = group.conj(x, s);
        if (raw_class[y] == kUnset) {
          raw_class[y] = id;
          conjugator[y] = group.mul(conjugator[x], s);
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    members.push_back(std::move(orbit));
  }

  const std::size_t k = reps.size();
  std::vector<std::uint32_t> orders(k);
  for (std::size_t t = 0; t < k; ++t) orders[t] = group.element_order(reps[t]);

  std::vector<std::uint32_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::tuple(orders[a], members[a].size(), reps[a]) < std::tuple(orders[b], members[b].size(), reps[b]);
  });
  std::vector<std::uint32_t> new_id(k);
  for (std::size_t i = 0; i < k; ++i) new_id[perm[i]] = static_cast<std::uint32_t>(i);

  ClassData cd;
  cd.group_order = n;
  cd.class_of.resize(n);
  for (Elem g = 0; g < n; ++g) cd.class_of[g] = new_id[raw_class[g]];
  cd.conjugator = std::move(conjugator);
  cd.classes.resize(k);
  cd.members.resize(k);
  std::uint64_t exponent = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t old = perm[i];
    auto& c = cd.classes[i];
    c.representative = reps[old];
    c.size = members[old].size();
    c.element_order = orders[old];
    c.centralizer_order = n / c.size;
    cd.members[i] = std::move(members[old]);
    exponent = std::lcm(exponent, std::uint64_t{c.element_order});
  }
  cd.exponent = static_cast<std::uint32_t>(exponent);

  // Labels: order followed by A, B, ... in class order.
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t same = 0;
    for (std::size_t j = 0; j < i; ++j) same += cd.classes[j].element_order == cd.classes[i].element_order;
    std::string suffix;
    std::size_t idx = same;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('A' + idx % 26));
      idx /= 26;
    } while (idx-- > 0);
    cd.classes[i].label = std::to_string(cd.classes[i].element_order) + suffix;
  }

  cd.inverse_class.resize(k);
  cd.power_class.resize(k);
  for (std::size_t t = 0; t < k; ++t) {
    const Elem r = cd.classes[t].representative;
    cd.inverse_class[t] = cd.class_of[group.inv(r)];
    auto& pc = cd.power_class[t];
    pc.resize(cd.classes[t].element_order);
    Elem x = group.identity();
    for (std::uint32_t s = 0; s < cd.classes[t].element_order; ++s) {
      pc[s] = cd.class_of[x];
      x = group.mul(x, r);
    }
  }

  std::uint64_t total = 0;
  for (const auto& c : cd.classes) {
    total += c.size;
    if (n % c.size != 0) throw InternalError("class size does not divide the group order");
  }
  if (total != n) throw InternalError("class sizes do not sum to the group order");
  return cd;
}

std::uint64_t min_centralizer_order(const ClassData& classes) {
  std::uint64_t best = classes.group_order;
  for (const auto& c : classes.classes) best = std::min(best, c.centralizer_order);
  return best;
}

}  // namespace cgw
