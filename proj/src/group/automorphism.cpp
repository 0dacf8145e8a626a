#include "cgw/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cgw/error.hpp"

namespace cgw {

namespace {

std::vector<Elem> conjugation_map(const Group& g, Elem x) {
  std::vector<Elem> m(g.order());
  for (Elem a = 0; a < g.order(); ++a) m[a] = g.conj(a, x);
  return m;
}

// Conjugation of a permutation group by a permutation of the same degree that
// need not lie in the group.
std::vector<Elem> perm_conjugation_map(const Group& g, const kernels::Perm16& s) {
  const std::uint32_t n = g.degree();
  kernels::Perm16 s_inv = kernels::Perm16::identity();
  for (std::uint32_t i = 0; i < n; ++i) s_inv.img[s.img[i]] = static_cast<std::uint8_t>(i);
  std::vector<Elem> m(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    const auto& p = g.permutation(a);
    kernels::Perm16 r = kernels::Perm16::identity();
    // s^-1 p s: apply s^-1, then p, then s.
    for (std::uint32_t i = 0; i < n; ++i) r.img[i] = s.img[p.img[s_inv.img[i]]];
    m[a] = g.index_of_permutation(r);
  }
  return m;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

AutAction automorphism_action(const Group& group) {
  AutAction act;
  const auto& d = group.descriptor();
  switch (d.family) {
    case Family::alternating:
    case Family::symmetric: {
      const std::uint32_t n = d.parameter;
      if (n == 6) {
        throw UnsupportedError(group.name() +
                               ": exceptional outer automorphism of degree 6 is unsupported");
      }
      kernels::Perm16 transposition = kernels::Perm16::identity();
      std::swap(transposition.img[0], transposition.img[1]);
      kernels::Perm16 ncycle = kernels::Perm16::identity();
      for (std::uint32_t i = 0; i < n; ++i) ncycle.img[i] = static_cast<std::uint8_t>((i + 1) % n);
      act.maps.push_back(perm_conjugation_map(group, transposition));
      act.names.push_back("conj (1 2)");
      if (n > 2) {
        act.maps.push_back(perm_conjugation_map(group, ncycle));
        act.names.push_back("conj (1 .. " + std::to_string(n) + ")");
      }
      act.out_order = (d.family == Family::alternating) ? 2 : 1;
      break;
    }
    case Family::psl2: {
      const Field& f = group.field();
      for (Elem s : group.generators()) {
        act.maps.push_back(conjugation_map(group, s));
        act.names.push_back("conj " + group.format(s));
      }
      // Diagonal automorphism: conjugation by diag(w, 1) from PGL2.
      const FieldElement w = f.primitive_element();
      const FieldElement w_inv = f.inv(w);
      std::vector<Elem> diag(group.order());
      for (Elem a = 0; a < group.order(); ++a) {
        const auto m = group.matrix(a);
        diag[a] = group.index_of_matrix({m[0], f.mul(m[1], w_inv), f.mul(m[2], w), m[3]});
      }
      act.maps.push_back(std::move(diag));
      act.names.push_back("conj diag(w,1)");
      if (f.degree() > 1) {
        std::vector<Elem> frob(group.order());
        for (Elem a = 0; a < group.order(); ++a) {
          const auto m = group.matrix(a);
          frob[a] = group.index_of_matrix({f.frobenius(m[0]), f.frobenius(m[1]), f.frobenius(m[2]), f.frobenius(m[3])});
        }
        act.maps.push_back(std::move(frob));
        act.names.push_back("frobenius");
      }
      act.out_order = gcd_u64(2, f.characteristic() - 1) * f.degree();
      break;
    }
    case Family::cyclic: {
      const std::uint32_t m = d.parameter;
      // Greedy generating set of the unit group (Z/m)^*.
      std::vector<char> reached(m, 0);
      std::vector<std::uint32_t> span_set{1 % m};
      reached[1 % m] = 1;
      std::uint64_t units = 0;
      for (std::uint32_t u = 1; u < m; ++u) units += std::gcd(u, m) == 1;
      if (m == 1) units = 1;
      for (std::uint32_t u = 2; u < m && span_set.size() < units; ++u) {
        if (std::gcd(u, m) != 1 || reached[u]) continue;
        std::vector<Elem> map(m);
        for (std::uint32_t a = 0; a < m; ++a) map[a] = static_cast<Elem>((std::uint64_t{a} * u) % m);
        act.maps.push_back(std::move(map));
        act.names.push_back("power " + std::to_string(u));
        for (std::size_t head = 0; head < span_set.size(); ++head) {
          const auto v = static_cast<std::uint32_t>((std::uint64_t{span_set[head]} * u) % m);
          if (!reached[v]) {
            reached[v] = 1;
            span_set.push_back(v);
          }
        }
        // Re-close under all chosen generators.
        for (std::size_t head = 0; head < span_set.size(); ++head) {
          for (const auto& g : act.maps) {
            const std::uint32_t v = g[span_set[head]];
            if (!reached[v]) {
              reached[v] = 1;
              span_set.push_back(v);
            }
          }
        }
      }
      act.out_order = units;
      break;
    }
    case Family::product:
      throw UnsupportedError(group.name() + ": automorphisms of direct products are unsupported");
  }
  return act;
}

bool is_automorphism(const Group& group, const std::vector<Elem>& map, std::size_t samples) {
  const std::size_t n = group.order();
  if (map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Elem a : map) {
    if (a >= n || hit[a]) return false;
    hit[a] = 1;
  }
  if (n <= 1200) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (map[group.mul(a, b)] != group.mul(map[a], map[b])) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x5eedu);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = static_cast<Elem>(rng() % n);
    const auto b = static_cast<Elem>(rng() % n);
    if (map[group.mul(a, b)] != group.mul(map[a], map[b])) return false;
  }
  return true;
}

AutClassOrbits aut_class_orbits(const Group& group, const ClassData& classes, const AutAction& action) {
  (void)group;
  const std::size_t k = classes.count();
  std::vector<std::uint32_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& map : action.maps) {
    for (std::uint32_t t = 0; t < k; ++t) unite(t, classes.class_of[map[classes.classes[t].representative]]);
  }
  AutClassOrbits out;
  auto collect = [&](std::vector<std::uint32_t>& id_of, std::vector<std::vector<std::uint32_t>>& blocks) {
    id_of.assign(k, 0);
    std::vector<std::int64_t> root_id(k, -1);
    for (std::uint32_t t = 0; t < k; ++t) {
      const std::uint32_t r = find(t);
      if (root_id[r] < 0) {
        root_id[r] = static_cast<std::int64_t>(blocks.size());
        blocks.emplace_back();
      }
      id_of[t] = static_cast<std::uint32_t>(root_id[r]);
      blocks[id_of[t]].push_back(t);
    }
  };
  collect(out.orbit_of_class, out.orbits);
  for (std::uint32_t t = 0; t < k; ++t) unite(t, classes.inverse_class[t]);
  collect(out.union_of_class, out.unions);
  return out;
}

}  // namespace cgw
