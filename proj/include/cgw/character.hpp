#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cgw/classes.hpp"
#include "cgw/cyclotomic.hpp"
#include "cgw/group.hpp"

namespace cgw {

// Structure constants a(i, j, t) = #{(x, y) in C_i x C_j : xy = z_t} for the
// class representative z_t.
struct ClassAlgebra {
  std::size_t k = 0;
  std::vector<std::uint64_t> constants;  // index (i * k + j) * k + t

  std::uint64_t at(std::size_t i, std::size_t j, std::size_t t) const { return constants[(i * k + j) * k + t]; }
};

ClassAlgebra class_algebra(const Group& group, const ClassData& classes);

inline constexpr std::size_t kMaxCharacterClasses = 60;

// Irreducible characters with exact values. The value of character i at class
// t is stored as eigenvalue multiplicities: mult[i][t][j] is how often
// exp(2 pi i j / o_t) occurs as an eigenvalue of a representing matrix of the
// class representative, o_t its order. The character value is the sum of those
// roots of unity; `values` holds the same numbers in double precision.
//
// Order: trivial character first, then ascending degree, ties broken by the
// lexicographic order of the multiplicity data.
struct CharacterTable {
  std::uint64_t group_order = 0;
  std::uint32_t exponent = 1;
  std::uint32_t prime = 0;  // the modular prime, 1 mod exponent
  std::uint32_t root = 0;   // primitive exponent-th root of unity mod prime used for the lift
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint32_t> class_orders;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint32_t> degrees;
  std::vector<std::vector<std::vector<std::uint32_t>>> mult;
  std::vector<std::vector<std::complex<double>>> values;
  std::vector<bool> real;

  std::size_t count() const noexcept { return degrees.size(); }
  std::size_t class_count() const noexcept { return class_sizes.size(); }

  // The value in Z[zeta_o] with o the order of the class representative.
  Cyclotomic exact(std::size_t chi, std::size_t t) const;
  // The value as integer coefficients over the exponent-th roots of unity.
  std::vector<std::int64_t> exponent_coefficients(std::size_t chi, std::size_t t) const;
  // Evaluation of the exact data; recomputes what `values` caches.
  std::complex<double> evaluate(std::size_t chi, std::size_t t) const;
};

// Smallest prime p = 1 (mod exponent) with p^2 > 4 |G|. Throws
// CapExceededError when none exists below 2^31.
std::uint32_t dixon_prime(std::uint32_t exponent, std::uint64_t group_order);

CharacterTable character_table(const Group& group, const ClassData& classes, const ClassAlgebra& algebra);
CharacterTable character_table(const Group& group, const ClassData& classes);

std::vector<std::size_t> real_characters(const CharacterTable& table);

// Rebuilds `values` and `real` from the exact data (used after loading a
// cached table).
void refresh_float_mirror(CharacterTable& table);

}  // namespace cgw
