#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgw/finite_field.hpp"
#include "cgw/kernels.hpp"

namespace cgw {

// Canonical element index: 0 is the identity, 0..|G|-1 enumerate the group.
using Elem = std::uint32_t;

enum class Family { alternating, symmetric, psl2, cyclic, product };

// Parsed form of the descriptor grammar: "A5", "S6", "PSL2(7)", "C12", and
// direct products joined by 'x' such as "S3xC2".
struct GroupDescriptor {
  Family family = Family::cyclic;
  std::uint32_t parameter = 1;
  std::vector<GroupDescriptor> factors;  // product only

  static GroupDescriptor parse(std::string_view text);
  std::string to_string() const;
};

// Largest order for which features that enumerate G (fibers, tuples, class
// algebra of arbitrary families) are permitted. A_n up to n = 9 and S_n up to
// n = 8 may exceed it; they still support classes and character tables.
inline constexpr std::size_t kEnumerationCap = 10000;

namespace detail {
class GroupImpl;
struct GroupState;
}  // namespace detail

// A fully enumerated finite group. Copies share the same immutable state.
//
// Multiplication convention: mul(a, b) applies a first, then b. For
// permutations (a*b)(i) = b(a(i)); for PSL2 it is the matrix product A*B
// acting on row vectors.
class Group {
 public:
  explicit Group(const GroupDescriptor& descriptor);
  static Group from_string(std::string_view text) { return Group(GroupDescriptor::parse(text)); }

  const GroupDescriptor& descriptor() const noexcept;
  std::string name() const { return descriptor().to_string(); }
  Family family() const noexcept { return descriptor().family; }
  std::size_t order() const noexcept;

  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::int64_t e) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(inv(x), g), x); }  // g^x = x^-1 g x
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::uint32_t element_order(Elem a) const;
  bool is_abelian() const;

  const std::vector<Elem>& generators() const noexcept;

  // Canonical encoding: permutation image vector (0-based), PSL2 matrix entry
  // codes (row-major), cyclic residue, or the concatenation for products.
  std::vector<int> encode(Elem a) const;
  Elem decode(std::span<const int> code) const;
  std::string format(Elem a) const;

  bool has_cayley_table() const noexcept;

  // Permutation families only.
  std::uint32_t degree() const;
  const kernels::Perm16& permutation(Elem a) const;
  Elem index_of_permutation(const kernels::Perm16& p) const;  // throws if not in G
  bool contains_permutation(const kernels::Perm16& p) const;
  std::uint32_t fixed_points(Elem a) const;

  // PSL2 only.
  const Field& field() const;
  std::array<FieldElement, 4> matrix(Elem a) const;
  Elem index_of_matrix(const std::array<FieldElement, 4>& m) const;

  // FNV-1a digest of the element encodings and the right-multiplication
  // action of every generator. Changes whenever the canonical indexing does.
  std::uint64_t digest() const noexcept;

 private:
  std::shared_ptr<const detail::GroupState> state_;
};

// Subgroup closure by breadth-first search over right multiplication by the
// generators and their inverses. Reuses an internal workspace, so one tester
// per thread.
class ClosureTester {
 public:
  explicit ClosureTester(const Group& group);

  // All elements of <gens>, sorted by index.
  std::vector<Elem> closure(std::span<const Elem> gens);

  // True iff <gens> = G; stops once the closure exceeds |G|/2.
  bool generates(std::span<const Elem> gens);

 private:
  std::size_t grow(std::span<const Elem> gens, std::size_t stop_above);

  const Group* group_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Elem> queue_;
};

std::vector<Elem> subgroup_closure(const Group& group, std::span<const Elem> gens);
bool is_generating_tuple(const Group& group, std::span<const Elem> tuple);

// Parses cycle notation such as "(1 2 3)(4 5)" or "(1,2)" (1-based points).
kernels::Perm16 parse_cycles(std::string_view text, std::uint32_t degree);

}  // namespace cgw
