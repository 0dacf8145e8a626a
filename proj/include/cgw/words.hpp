#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cgw/character.hpp"
#include "cgw/classes.hpp"
#include "cgw/group.hpp"
#include "cgw/rational.hpp"
#include "cgw/spectral.hpp"

namespace cgw {

struct Letter {
  std::uint8_t variable = 0;  // 0-based: x1 is 0
  std::int8_t exponent = 1;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word in x1..x9.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::uint32_t arity() const noexcept;  // highest variable index used

  Word inverse() const;
  Word operator*(const Word& o) const;
  Word power(std::int64_t k) const;
  static Word variable(std::uint32_t index);  // 0-based
  static Word commutator(const Word& u, const Word& v);  // u^-1 v^-1 u v

  // Replaces x_{i+1} by images[i].
  Word substitute(const std::vector<Word>& images) const;

  // Canonical text such as "x1^-1x2^-1x1x2"; the empty word prints as "1".
  std::string to_string() const;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Grammar: variables x1..x9, juxtaposition, powers ^k (k may be negative),
// brackets [u,v] = u^-1 v^-1 u v, parentheses. Throws ParseError.
Word parse_word(std::string_view text);

// A bracket arrangement of distinct variables.
class CommutatorShape {
 public:
  static CommutatorShape leaf(std::uint32_t variable);  // 0-based
  static CommutatorShape bracket(const CommutatorShape& left, const CommutatorShape& right);
  // Parses text such as "[[x1,x2],[x3,x4]]".
  static CommutatorShape parse(std::string_view text);

  std::uint32_t leaves() const;
  bool is_leaf() const noexcept { return !left_; }
  bool valid() const;  // leaf labels are exactly x1..xm
  std::string to_string() const;

  // Every bracket arrangement of x1..xm with the leaves in order.
  static std::vector<CommutatorShape> all(std::uint32_t m);

  friend Word shape_to_word(const CommutatorShape& shape);

 private:
  std::uint32_t variable_ = 0;
  std::shared_ptr<const CommutatorShape> left_, right_;
};

Word shape_to_word(const CommutatorShape& shape);

// Substitutes the tuple and multiplies left to right: the leftmost letter acts first.
Elem evaluate(const Word& w, const Group& group, const std::vector<Elem>& tuple);

inline constexpr std::uint64_t kBruteForceCap = 100000000;   // |G|^arity
inline constexpr std::uint64_t kDefaultSamples = 10000000;

enum class BruteMode { automatic, exhaustive, sampled };

struct BruteOptions {
  BruteMode mode = BruteMode::exhaustive;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
};

// Exact fibers by enumeration (the first variable runs over class
// representatives weighted by class size), or sample counts from uniform
// random tuples. Exhaustive mode above the cap throws CapExceededError;
// automatic mode falls back to sampling.
FiberTable brute_force_fibers(const Word& w, const Group& group, const ClassData& classes,
                              const BruteOptions& options = {});

// (m - 1)^(1/2) (zeta(2) - 1)^(1/4)
double gamma_bound(const CharacterTable& table, std::uint32_t m);

// L1 distance of the product measure of two word distributions to uniform on
// the product group, compared against the sum of the factor distances.
struct L1SumCheck {
  Rational combined, first, second;
  bool verdict() const { return combined <= first + second; }
};
L1SumCheck product_l1_check(const FiberTable& first, const FiberTable& second);

// Composition of `inner` (any arity) followed by the one-variable word `outer`
// on the same group. `combined` is pushed forward exactly element by element.
L1SumCheck composition_l1_check(const Word& inner, const Word& outer, const Group& group, const ClassData& classes);

struct ShapeEquidistribution {
  std::string shape;
  std::uint32_t m = 0;
  double gamma = 0;
  bool applicable = false;  // gamma < 1
  bool verdict = true;      // witness with eps = gamma succeeds (true when not applicable)
};
ShapeEquidistribution shape_equidistribution_check(const CommutatorShape& shape, const Group& group,
                                                  const ClassData& classes, const CharacterTable& table);

// Elements g = w(g1, ..., gm) for a commutator shape w with every pair
// <gi, gj> = G.
struct PairwiseGeneratedImage {
  std::string shape;
  std::vector<bool> covered;  // per element
  std::uint64_t count = 0;
  std::uint64_t tuples = 0;           // tuples examined
  std::uint64_t qualifying = 0;       // tuples with all pairs generating
  bool exhaustive = true;
  bool conjugation_closed = false;
};
PairwiseGeneratedImage pairwise_generated_image(const CommutatorShape& shape, const Group& group,
                                                const ClassData& classes, const BruteOptions& options = {});

}  // namespace cgw
