#include <vector>

#include "cgw/character.hpp"
#include "cgw/error.hpp"
#include "cgw/kernels.hpp"

namespace cgw {

namespace {

bool is_permutation_family(const Group& g) {
  return g.family() == Family::alternating || g.family() == Family::symmetric;
}

}  // namespace

ClassAlgebra class_algebra(const Group& group, const ClassData& classes) {
  if (!is_permutation_family(group) && group.order() > kEnumerationCap)
    throw CapExceededError("class algebra of " + group.name() + " exceeds the enumeration cap");
  const std::size_t k = classes.count();
  ClassAlgebra alg;
  alg.k = k;
  alg.constants.assign(k * k * k, 0);

  if (is_permutation_family(group)) {
    const auto& kern = kernels::active();
    std::vector<std::vector<kernels::Perm16>> inverses(k);
    for (std::size_t i = 0; i < k; ++i) {
      inverses[i].reserve(classes.members[i].size());
      for (Elem x : classes.members[i]) inverses[i].push_back(group.permutation(group.inv(x)));
    }
    std::vector<kernels::Perm16> out;
    for (std::size_t t = 0; t < k; ++t) {
      const kernels::Perm16& z = group.permutation(classes.classes[t].representative);
      for (std::size_t i = 0; i < k; ++i) {
        out.resize(inverses[i].size());
        kern.compose_then(inverses[i].data(), z, out.data(), out.size());
        for (const auto& y : out) {
          const std::uint32_t j = classes.class_of[group.index_of_permutation(y)];
          ++alg.constants[(i * k + j) * k + t];
        }
      }
    }
    return alg;
  }

  for (std::size_t t = 0; t < k; ++t) {
    const Elem z = classes.classes[t].representative;
    for (std::size_t i = 0; i < k; ++i) {
      for (Elem x : classes.members[i]) {
        const std::uint32_t j = classes.class_of[group.mul(group.inv(x), z)];
        ++alg.constants[(i * k + j) * k + t];
      }
    }
  }
  return alg;
}

}  // namespace cgw
