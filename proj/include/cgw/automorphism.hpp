#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgw/classes.hpp"
#include "cgw/group.hpp"

namespace cgw {

// Generators of Aut(G) acting on element indices. The closure of `maps`
// under composition is the full automorphism group for the supported families.
struct AutAction {
  std::vector<std::vector<Elem>> maps;  // maps[i][g] = image of g
  std::vector<std::string> names;
  std::uint64_t out_order = 1;  // |Out(G)|
};

// Throws UnsupportedError for A6 and S6 (exceptional outer automorphism) and
// for direct products.
AutAction automorphism_action(const Group& group);

// True when `map` is a bijective homomorphism; exhaustive for |G| <= 1200,
// otherwise checked on `samples` pseudo-random pairs.
bool is_automorphism(const Group& group, const std::vector<Elem>& map, std::size_t samples = 10000);

struct AutClassOrbits {
  std::vector<std::uint32_t> orbit_of_class;  // Aut(G)-orbit id per class
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<std::uint32_t> union_of_class;  // id of the inverse-closed union C u C^-1
  std::vector<std::vector<std::uint32_t>> unions;  // sorted class indices
};

AutClassOrbits aut_class_orbits(const Group& group, const ClassData& classes, const AutAction& action);

}  // namespace cgw
