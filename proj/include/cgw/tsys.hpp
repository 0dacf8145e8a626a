#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cgw/automorphism.hpp"
#include "cgw/classes.hpp"
#include "cgw/group.hpp"
#include "cgw/rational.hpp"

namespace cgw {

inline constexpr std::uint64_t kTupleCap = 10000000;     // stored tuples
inline constexpr std::uint64_t kTupleScanCap = 100000000;  // |G|^k scanned

// All generating k-tuples, sorted lexicographically; the position in that
// order is the tuple's dense index.
class GeneratingTupleSet {
 public:
  GeneratingTupleSet(std::uint32_t k, std::uint64_t group_order, std::vector<std::uint64_t> keys);

  std::uint32_t k() const noexcept { return k_; }
  std::uint64_t group_order() const noexcept { return n_; }
  std::size_t size() const noexcept { return keys_.size(); }

  std::vector<Elem> tuple(std::size_t index) const;
  void tuple(std::size_t index, std::span<Elem> out) const;
  // Dense index, or -1 when the tuple does not generate.
  std::int64_t index_of(std::span<const Elem> tuple) const;
  bool contains(std::span<const Elem> tuple) const { return index_of(tuple) >= 0; }

 private:
  std::uint64_t key(std::span<const Elem> tuple) const;

  std::uint32_t k_;
  std::uint64_t n_;
  std::vector<std::uint64_t> keys_;
};

// table[a * |G| + b] = 1 when <a, b> = G; built from class representatives
// by conjugation. Throws CapExceededError above 4096 elements.
std::vector<std::uint8_t> pair_generation_table(const Group& group, const ClassData& classes);

// k in {2, 3}. Throws CapExceededError above the caps.
GeneratingTupleSet generating_tuples(const Group& group, const ClassData& classes, std::uint32_t k);

enum class MoveKind { right, right_inverse, left, left_inverse, swap, invert };

// R: gi -> gi gj^{+-1}, L: gi -> gj^{+-1} gi, P swaps gi and gj, I inverts gi.
struct Move {
  MoveKind kind = MoveKind::right;
  std::uint32_t i = 0, j = 0;  // 0-based; j unused for invert
};

std::string to_string(const Move& move);

// The product replacement edges R+-, L+- for every ordered pair i != j, plus
// the swaps and inversions when `extended`.
class MoveSet {
 public:
  MoveSet(std::uint32_t k, bool extended);

  std::uint32_t k() const noexcept { return k_; }
  bool extended() const noexcept { return extended_; }
  const std::vector<Move>& moves() const noexcept { return moves_; }

 private:
  std::uint32_t k_;
  bool extended_;
  std::vector<Move> moves_;
};

void apply_move(const Group& group, const Move& move, std::span<Elem> tuple);
std::vector<std::vector<Elem>> nielsen_neighbors(const Group& group, std::span<const Elem> tuple, const MoveSet& moves);

// Sorted class indices of the Aut-orbit union containing the commutator
// class and its inverse.
using HigmanLabel = std::vector<std::uint32_t>;

struct Component {
  std::uint64_t size = 0;
  std::size_t representative = 0;  // smallest tuple index
};

struct ComponentStructure {
  std::vector<std::uint32_t> component_of;  // per tuple; components numbered by representative
  std::vector<Component> components;
  std::size_t count() const noexcept { return components.size(); }
};

// Union-find over all move edges. Throws VerificationError if a move leaves
// the tuple set.
ComponentStructure graph_components(const Group& group, const GeneratingTupleSet& tuples, const MoveSet& moves);

// Extended graph additionally merged under each automorphism generator.
ComponentStructure t_systems(const Group& group, const GeneratingTupleSet& tuples, const AutAction& action);

HigmanLabel higman_invariant(const Group& group, std::span<const Elem> pair, const ClassData& classes,
                             const AutClassOrbits& orbits);

struct T2Census {
  std::vector<HigmanLabel> labels;  // distinct labels, sorted
  std::uint64_t min_centralizer = 0;
  std::uint64_t out_order = 1;
  double bound = 0;  // c(G) / (2 |Out(G)|)
  std::size_t size() const noexcept { return labels.size(); }
};
T2Census t2_invariant_census(const Group& group, const GeneratingTupleSet& pairs, const ClassData& classes,
                             const AutAction& action);

// True when `label` is constant on every component of `components`.
bool higman_constant_on_components(const Group& group, const GeneratingTupleSet& pairs, const ClassData& classes,
                                   const AutClassOrbits& orbits, const ComponentStructure& components);

struct ComponentInvariantCheck {
  std::size_t components = 0;
  std::size_t violations = 0;  // components where the commutator class varies
  bool verdict() const { return violations == 0; }
};
// The conjugacy class of [g1, g2] on the product replacement graph on pairs.
ComponentInvariantCheck pra_component_invariant_check(const Group& group, const GeneratingTupleSet& pairs,
                                                      const ClassData& classes);

// #T <= extended count <= plain count <= 2 extended count
struct ComponentChain {
  std::size_t t_systems = 0, extended = 0, plain = 0;
  bool verdict() const { return t_systems <= extended && extended <= plain && plain <= 2 * extended; }
};
ComponentChain component_chain(const Group& group, const GeneratingTupleSet& tuples, const AutAction& action);

struct WalkParams {
  std::uint32_t k = 3;
  std::uint64_t steps = 1;
  std::uint64_t burn_in = 1000;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

struct WalkReport {
  WalkParams params;
  std::vector<Elem> start;
  std::vector<Elem> samples;
  std::vector<std::uint64_t> histogram;  // per element
  double l1_to_uniform = 0;
};

// First generating k-tuple in lexicographic order. Throws UnsupportedError
// when none exists within the scan cap.
std::vector<Elem> first_generating_tuple(const Group& group, std::uint32_t k);

// Product replacement walk; k in 2..5.
WalkReport pra_walk(const Group& group, const WalkParams& params);

// L1 distance between the empirical distributions of two walks.
double walk_l1_between(const WalkReport& a, const WalkReport& b);

struct CommutatorCoverage {
  std::vector<bool> covered;  // per element
  std::uint64_t count = 0;
  Rational fraction;          // count / |G|
  Rational pair_fraction;     // |V2| / |G|^2
  double epsilon = 0;
  double bound = 0;           // pair_fraction - 3 epsilon
  bool holds = false;
  bool vacuous = false;       // bound <= 0
};
CommutatorCoverage commutator_generating_coverage(const Group& group, const GeneratingTupleSet& pairs, double epsilon);

}  // namespace cgw
