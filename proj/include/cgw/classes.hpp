#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgw/group.hpp"

namespace cgw {

struct ConjugacyClass {
  Elem representative = 0;  // smallest element index in the class
  std::uint64_t size = 0;
  std::uint32_t element_order = 1;
  std::uint64_t centralizer_order = 0;  // |G| / size
  std::string label;  // element order followed by a letter, e.g. "7B"
};

// Conjugacy classes ordered by (element order, class size, representative).
struct ClassData {
  std::uint64_t group_order = 0;
  std::uint32_t exponent = 1;  // lcm of element orders
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;  // per element
  std::vector<Elem> conjugator;  // per element g: some h with rep^h = g
  std::vector<std::vector<Elem>> members;  // per class, sorted
  std::vector<std::uint32_t> inverse_class;
  // power_class[t][s] = class of rep_t^s for 0 <= s < element order.
  std::vector<std::vector<std::uint32_t>> power_class;

  std::size_t count() const noexcept { return classes.size(); }
  std::uint32_t class_of_element(Elem g) const { return class_of[g]; }
  std::uint32_t power_map(std::uint32_t t, std::int64_t s) const;
};

ClassData conjugacy_classes(const Group& group);

// c(G) = min over classes of the centralizer order.
std::uint64_t min_centralizer_order(const ClassData& classes);

}  // namespace cgw
