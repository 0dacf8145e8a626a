#pragma once

// Direct enumeration oracles, deliberately naive.

#include <cstdint>
#include <vector>

#include "cgw/classes.hpp"
#include "cgw/group.hpp"

namespace oracle {

// a(i, j, t) by looping over C_i x C_j.
inline std::vector<std::uint64_t> structure_constants(const cgw::Group& g, const cgw::ClassData& cd) {
  const std::size_t k = cd.count();
  std::vector<std::uint64_t> a(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (cgw::Elem x : cd.members[i])
        for (cgw::Elem y : cd.members[j]) {
          const cgw::Elem z = g.mul(x, y);
          const std::size_t t = cd.class_of[z];
          if (z == cd.classes[t].representative) ++a[(i * k + j) * k + t];
        }
  return a;
}

// Fibers of (x, y) -> x^-1 y^-1 x y over all |G|^2 pairs, per element.
inline std::vector<std::uint64_t> commutator_fibers(const cgw::Group& g) {
  std::vector<std::uint64_t> n(g.order(), 0);
  for (cgw::Elem x = 0; x < g.order(); ++x)
    for (cgw::Elem y = 0; y < g.order(); ++y) ++n[g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y))];
  return n;
}

inline std::vector<std::uint64_t> square_product_fibers(const cgw::Group& g) {
  std::vector<std::uint64_t> n(g.order(), 0);
  for (cgw::Elem x = 0; x < g.order(); ++x)
    for (cgw::Elem y = 0; y < g.order(); ++y) ++n[g.mul(g.mul(x, x), g.mul(y, y))];
  return n;
}

}  // namespace oracle
