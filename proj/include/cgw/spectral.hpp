#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cgw/character.hpp"
#include "cgw/classes.hpp"
#include "cgw/group.hpp"
#include "cgw/rational.hpp"

namespace cgw {

// Sum over irreducible characters of chi(1)^-s.
double witten_zeta(const CharacterTable& table, double s);

struct ZetaSummary {
  double zeta2 = 1;
  double delta = 0;    // (zeta(2) - 1)^(1/2)
  double epsilon = 0;  // (zeta(2) - 1)^(1/4)
};
ZetaSummary delta_epsilon(const CharacterTable& table);

// (sum over real characters of chi(1)^-2 - 1)^(1/2)
double real_character_bound(const CharacterTable& table);

// Exact squares of the two bounds: sum over nontrivial (real) characters of chi(1)^-2.
Rational zeta_excess_exact(const CharacterTable& table);
Rational real_excess_exact(const CharacterTable& table);

// Fiber sizes of a word map G^arity -> G, stored per conjugacy class.
// class_totals[t] is the number of tuples (or samples) landing anywhere in
// class t; in exhaustive mode counts[t] = class_totals[t] / |C_t| is the fiber
// above each single element of the class.
struct FiberTable {
  std::string word;
  std::uint32_t arity = 2;
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> class_totals;
  std::vector<std::uint64_t> counts;  // empty when sampled
  std::uint64_t total = 0;            // |G|^arity, or the sample count
  bool sampled = false;

  std::size_t class_count() const noexcept { return class_sizes.size(); }
  // Throws VerificationError unless the class totals add up to `total`.
  void verify_conservation() const;
  // Fiber above one element of class t divided by |G|^(arity - 1).
  Rational normalized(std::size_t t) const;
};

// N(g) = |G| sum_chi chi(g) / chi(1), evaluated exactly; throws
// VerificationError if some value is not a nonnegative integer.
FiberTable frobenius_fibers(const CharacterTable& table);

// Fibers of (x, y) -> x^2 y^2: the same sum over the real characters only.
FiberTable squares_word_fibers(const CharacterTable& table);

// A class function on G, stored as the mass of each single element per class.
struct Distribution {
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<Rational> mass;
  std::vector<double> mass_float;
  std::uint32_t arity = 1;

  static Distribution from_fibers(const FiberTable& fibers);
  static Distribution uniform(std::uint64_t group_order, const std::vector<std::uint64_t>& class_sizes);
  // All mass on the identity (class 0).
  static Distribution identity_mass(std::uint64_t group_order, const std::vector<std::uint64_t>& class_sizes);
  static Distribution from_masses(std::uint64_t group_order, const std::vector<std::uint64_t>& class_sizes,
                                  std::vector<Rational> mass);

  Rational total_mass() const;
};

struct FourierReport {
  std::vector<std::complex<double>> coefficients;  // one per character, in table order
  double sum_of_squares = 0;                        // sum_g P(g)^2
  double plancherel = 0;                            // |G|^-1 sum |a_chi|^2
};

// a_chi with P = |G|^-1 sum a_chi chi. Throws VerificationError if a_1 != 1 or
// the Plancherel identity fails by more than 1e-8.
FourierReport fourier_coefficients(const Distribution& dist, const CharacterTable& table);

// Exact L1 distance sum_g |p(g) - q(g)|.
Rational l1_distance(const Distribution& p, const Distribution& q);
// Float L1 distance to the uniform distribution.
double l1_to_uniform(const Distribution& p);
Rational l1_to_uniform_exact(const FiberTable& fibers);

// ||P - U||_1 <= sqrt(bound_squared), decided exactly as l1^2 <= bound_squared.
struct L1BoundCheck {
  std::string word;
  Rational l1;
  Rational bound_squared;
  double bound = 0;
  bool holds() const { return l1 * l1 <= bound_squared; }
};
// Commutator fibers against the zeta excess; square-product fibers against the real excess.
L1BoundCheck commutator_l1_check(const CharacterTable& table);
L1BoundCheck squares_l1_check(const CharacterTable& table);

struct DeviationRow {
  Rational delta;    // N(g) / |G| - 1
  double bound = 0;  // E(g) = sum_{chi != 1} |chi(g)| / chi(1)
  bool within = true;
};
std::vector<DeviationRow> deviation_report(const FiberTable& commutator_fibers, const CharacterTable& table);

struct EquidistributionWitness {
  Rational epsilon;
  std::vector<std::uint32_t> classes;  // classes in the witness subset
  std::uint64_t size = 0;              // number of elements in the subset
  bool large_enough = false;           // size >= (1 - eps) |G|
  bool fibers_within = false;          // every normalized fiber in [1 - eps, 1 + eps]
  Rational min_ratio, max_ratio;       // over the subset (0 when empty)
  bool verdict() const { return large_enough && fibers_within; }
};

// Keeps the classes whose normalized fiber deviates from 1 by at most eps.
EquidistributionWitness equidistribution_witness(const FiberTable& fibers, const Rational& epsilon);
EquidistributionWitness equidistribution_witness(const FiberTable& fibers, double epsilon);
// The witness at eps = sqrt(d), decided exactly by comparing squares; the
// reported epsilon is the double rounded up.
EquidistributionWitness equidistribution_witness_sqrt(const FiberTable& fibers, const Rational& d);

struct MeasureCheck {
  Rational preimage_mass;  // |f^-1(Y0)| / |G|^arity
  Rational target_mass;    // |Y0| / |G|
  Rational slack;          // 3 eps
  bool verdict = false;    // |preimage - target| <= slack
};

// `per_class` gives how many elements of Y0 lie in each class.
MeasureCheck measure_preservation_check(const FiberTable& fibers, const std::vector<std::uint64_t>& per_class,
                                        const Rational& epsilon);
MeasureCheck measure_preservation_check(const FiberTable& fibers, const ClassData& classes,
                                        const std::vector<Elem>& subset, const Rational& epsilon);

struct CommutatorCount {
  std::uint64_t count = 0;  // elements with a nonempty fiber
  double bound = 0;         // (1 - delta) |G|
  bool verdict = false;
  bool vacuous = false;     // delta >= 1
};
CommutatorCount commutator_count_check(const FiberTable& fibers, double delta);

// Closed-form deviations for PSL2(q).
enum class Psl2ElementKind { split, nonsplit, unipotent };
std::string to_string(Psl2ElementKind kind);

// exponent is l (split) or m (nonsplit); ignored for unipotent elements.
Rational psl2_delta_closed_form(std::uint32_t q, Psl2ElementKind kind, std::uint32_t exponent);

struct Psl2DeltaRow {
  Psl2ElementKind kind;
  std::uint32_t exponent = 0;  // power of the torus generator; 1 for unipotent rows
  std::uint32_t class_index = 0;
  Rational closed_form;
  Rational from_table;
  bool match() const { return closed_form == from_table; }
};

// One row per power a^l != 1 of a split torus generator, per power b^m != 1 of
// a nonsplit one, and per unipotent class.
std::vector<Psl2DeltaRow> psl2_delta_rows(const Group& psl2, const ClassData& classes, const FiberTable& fibers);

struct SnBoundRow {
  std::uint32_t class_index = 0;
  std::uint32_t fixed_points = 0;
  bool skipped = false;  // f = 0
  double delta = 0;
  double worst_ratio = 0;  // max over characters of log|chi(g)| / log chi(1) compared with 1 - delta
  std::uint32_t violations = 0;
};
struct SnBoundReport {
  std::uint32_t n = 0;
  std::vector<SnBoundRow> rows;
  std::uint32_t violations = 0;
};

// Checks |chi(g)| <= chi(1)^(1 - delta(n, f)) for classes with 1 <= f < n.
SnBoundReport sn_character_bound_check(const Group& sn, const ClassData& classes, const CharacterTable& table);
double sn_bound_delta(std::uint32_t n, std::uint32_t f);

struct FixedPointTail {
  std::uint32_t n = 0, f = 0;
  Rational bound;           // 2 / f!
  Rational exact_fraction;  // proportion of A_n elements with at least f fixed points
  bool holds = false;
};
FixedPointTail an_fixed_point_tail(std::uint32_t n, std::uint32_t f);

struct ZetaTrendRow {
  std::uint32_t parameter = 0;
  std::uint64_t group_order = 0;
  double zeta_minus_one = 0;
  double scaled = 0;  // n^s (zeta - 1) for A_n, q (zeta - 1) for PSL2
};
struct ZetaTrendReport {
  Family family = Family::alternating;
  double s = 2;
  std::vector<ZetaTrendRow> rows;
  double constant = 0;    // asserted bound on `scaled`
  bool asserted = false;  // false when no bound applies (PSL2 with s != 2)
  bool bounded = false;
  bool decreasing = false;  // zeta - 1 strictly decreasing along the parameters
};

using TableProvider = std::function<CharacterTable(const Group&)>;
ZetaTrendReport zeta_trend_report(Family family, const std::vector<std::uint32_t>& parameters, double s,
                                  const TableProvider& provider = {});

}  // namespace cgw
