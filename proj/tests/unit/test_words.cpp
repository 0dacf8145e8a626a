#include <doctest.h>

#include <cmath>
#include <random>

#include "cgw/error.hpp"
#include "cgw/random.hpp"
#include "cgw/words.hpp"

using namespace cgw;

namespace {

struct Built {
  Group group;
  ClassData classes;
};

Built build(const std::string& name) {
  Group g = Group::from_string(name);
  ClassData cd = conjugacy_classes(g);
  return {std::move(g), std::move(cd)};
}

Elem perm(const Group& g, const char* cycles) { return g.index_of_permutation(parse_cycles(cycles, g.degree())); }

std::size_t parse_error_position(const char* text) {
  try {
    parse_word(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("word parsing and free reduction") {
  CHECK(parse_word("[x1,x2]").to_string() == "x1^-1x2^-1x1x2");
  CHECK(parse_word("x1^2x2^2").to_string() == "x1x1x2x2");
  CHECK(parse_word("x1x1^-1").empty());
  CHECK(parse_word("x1x1^-1").to_string() == "1");
  CHECK(parse_word(" x2 ( x1 x3 )^-1 ").to_string() == "x2x3^-1x1^-1");
  CHECK(parse_word("x1^0x2").to_string() == "x2");
  CHECK(parse_word("[x1,x2]^-1") == parse_word("[x2,x1]"));
  CHECK(parse_word("[[x1,x2],x3]") == Word::commutator(parse_word("[x1,x2]"), Word::variable(2)));
  CHECK(parse_word("x1x2x2^-1x1^-1x3").to_string() == "x3");
  CHECK(parse_word("x3").arity() == 3);
  CHECK(parse_word("x1^3").power(-2).length() == 6);

  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("x0") == 1);
  CHECK(parse_error_position("x1y") == 2);
  CHECK(parse_error_position("[x1,x2") == 0);
  CHECK(parse_error_position("x1^") == 3);
  CHECK(parse_error_position("x1)") == 2);
  CHECK_THROWS_AS(parse_word("x1^100000"), ParseError);
}

TEST_CASE("free reduction invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    const std::size_t len = bounded_draw(rng, 20);
    for (std::size_t i = 0; i < len; ++i)
      raw.push_back({static_cast<std::uint8_t>(bounded_draw(rng, 2)), static_cast<std::int8_t>(bounded_draw(rng, 2) ? 1 : -1)});
    const Word w(raw);
    for (std::size_t i = 1; i < w.length(); ++i) {
      const auto& a = w.letters()[i - 1];
      const auto& b = w.letters()[i];
      CHECK_FALSE((a.variable == b.variable && a.exponent == -b.exponent));
    }
    CHECK((w * w.inverse()).empty());
    CHECK(parse_word(w.to_string() == "1" ? "x1x1^-1" : w.to_string()) == w);
  }
}

TEST_CASE("commutator shapes") {
  CHECK(shape_to_word(CommutatorShape::parse("[x1,x2]")) == parse_word("[x1,x2]"));
  CHECK(shape_to_word(CommutatorShape::parse("[[x1,x2],x3]")) == parse_word("[[x1,x2],x3]"));
  const auto balanced = CommutatorShape::parse("[[x1,x2],[x3,x4]]");
  CHECK(balanced.leaves() == 4);
  CHECK(balanced.to_string() == "[[x1,x2],[x3,x4]]");
  CHECK(shape_to_word(balanced).length() == 16);
  CHECK_THROWS_AS(CommutatorShape::parse("[x1,x1]"), ParseError);
  CHECK_THROWS_AS(CommutatorShape::parse("[x1,x3]"), ParseError);
  CHECK_THROWS_AS(CommutatorShape::parse("[x1,x2"), ParseError);
  // Catalan numbers
  CHECK(CommutatorShape::all(1).size() == 1);
  CHECK(CommutatorShape::all(2).size() == 1);
  CHECK(CommutatorShape::all(3).size() == 2);
  CHECK(CommutatorShape::all(4).size() == 5);
  CHECK(CommutatorShape::all(5).size() == 14);
  for (const auto& s : CommutatorShape::all(4)) {
    CHECK(s.valid());
    CHECK(CommutatorShape::parse(s.to_string()).to_string() == s.to_string());
  }
}

TEST_CASE("evaluation convention") {
  const Group s3 = Group::from_string("S3");
  const Word c = parse_word("[x1,x2]");
  const Elem a = perm(s3, "(1 2)"), b = perm(s3, "(1 3)");
  CHECK(evaluate(c, s3, {a, b}) == perm(s3, "(1 3 2)"));
  for (Elem g = 0; g < s3.order(); ++g) CHECK(evaluate(c, s3, {g, g}) == s3.identity());
  CHECK(evaluate(parse_word("x1^2x2^2"), s3, {perm(s3, "(1 2 3)"), perm(s3, "(1 3 2)")}) == s3.identity());
  CHECK(evaluate(c, s3, {a, b}) == s3.commutator(a, b));
  CHECK_THROWS(evaluate(c, s3, {a}));
}

TEST_CASE("brute-force fibers") {
  const auto c2 = build("C2");
  const auto sq = brute_force_fibers(parse_word("x1^2"), c2.group, c2.classes);
  CHECK(sq.counts == std::vector<std::uint64_t>{2, 0});

  const auto a5 = build("A5");
  const auto proj = brute_force_fibers(parse_word("x1x2x2^-1"), a5.group, a5.classes);
  CHECK(proj.arity == 1);
  for (auto c : proj.counts) CHECK(c == 1);
  const auto proj3 = brute_force_fibers(parse_word("x1[x2,x3]x3x3^-1[x2,x3]^-1"), a5.group, a5.classes);
  CHECK(proj3.arity == 1);

  const auto c = brute_force_fibers(parse_word("[x1,x2]"), a5.group, a5.classes);
  CHECK(c.counts.back() == 65);
  CHECK(c.total == 3600);

  const auto id = brute_force_fibers(Word(), a5.group, a5.classes);
  CHECK(id.counts.front() == 1);
  CHECK(id.total == 1);

  CHECK_THROWS_AS(brute_force_fibers(parse_word("x1x2x3x4x5"), a5.group, a5.classes), CapExceededError);
  BruteOptions opt;
  opt.mode = BruteMode::automatic;
  opt.samples = 20000;
  opt.seed = 3;
  const auto sampled = brute_force_fibers(parse_word("x1x2x3x4x5"), a5.group, a5.classes, opt);
  CHECK(sampled.sampled);
  CHECK(sampled.counts.empty());
  CHECK(sampled.total == 20000);
  const auto again = brute_force_fibers(parse_word("x1x2x3x4x5"), a5.group, a5.classes, opt);
  CHECK(again.class_totals == sampled.class_totals);
}

TEST_CASE("brute force matches the character formulas") {
  for (const char* name : {"C1", "C6", "S3", "A4", "S4", "A5", "S5", "PSL2(7)", "PSL2(8)", "A4xC2", "S3xC2", "A6",
                           "PSL2(11)", "PSL2(13)"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto table = character_table(b.group, b.classes);
    const auto bc = brute_force_fibers(parse_word("[x1,x2]"), b.group, b.classes);
    const auto fc = frobenius_fibers(table);
    CHECK(bc.counts == fc.counts);
    CHECK(bc.total == b.group.order() * b.group.order());
    const auto bs = brute_force_fibers(parse_word("x1^2x2^2"), b.group, b.classes);
    CHECK(bs.counts == squares_word_fibers(table).counts);
  }
}

TEST_CASE("fiber sums are conserved") {
  for (const char* name : {"C5", "S3", "A4", "PSL2(4)"}) {
    const auto b = build(name);
    for (const char* w : {"x1", "x1^3", "[x1,x2]x3", "[[x1,x2],x3]", "x1^2x2^-1x1"}) {
      const auto f = brute_force_fibers(parse_word(w), b.group, b.classes);
      std::uint64_t sum = 0;
      for (std::size_t t = 0; t < f.class_count(); ++t) sum += f.counts[t] * f.class_sizes[t];
      CHECK(sum == f.total);
    }
  }
}

TEST_CASE("gamma bound") {
  const auto a5 = build("A5");
  const auto table = character_table(a5.group, a5.classes);
  CHECK(gamma_bound(table, 2) == doctest::Approx(delta_epsilon(table).epsilon).epsilon(1e-15));
  CHECK(gamma_bound(table, 3) == doctest::Approx(1.0675617).epsilon(1e-6));
  CHECK_THROWS(gamma_bound(table, 1));
  CHECK(2 * std::pow(0.04, 0.25) == doctest::Approx(0.894427).epsilon(1e-6));
}

TEST_CASE("product of word maps") {
  const struct {
    const char *product, *first, *second;
  } cases[] = {{"C2xC3", "C2", "C3"}, {"S3xC2", "S3", "C2"}, {"A4xC2", "A4", "C2"}};
  for (const auto& c : cases) {
    CAPTURE(c.product);
    const auto g1 = build(c.first), g2 = build(c.second), prod = build(c.product);
    for (const char* text : {"[x1,x2]", "x1^2x2^2", "x1^2", "x1^3x2"}) {
      CAPTURE(text);
      const Word w = parse_word(text);
      const auto f1 = brute_force_fibers(w, g1.group, g1.classes);
      const auto f2 = brute_force_fibers(w, g2.group, g2.classes);
      const auto r = product_l1_check(f1, f2);
      CHECK(r.verdict());
      // the same word on the product group is the product map
      CHECK(l1_to_uniform_exact(brute_force_fibers(w, prod.group, prod.classes)) == r.combined);
    }
  }
}

TEST_CASE("composition of word maps") {
  for (const char* name : {"C6", "S3", "A4", "C2xC3", "S4", "A5"}) {
    CAPTURE(name);
    const auto b = build(name);
    for (const char* inner : {"[x1,x2]", "x1^2x2^2", "x1^3"})
      for (const char* outer : {"x1^2", "x1^3", "x1"}) {
        CAPTURE(inner);
        CAPTURE(outer);
        const auto r = composition_l1_check(parse_word(inner), parse_word(outer), b.group, b.classes);
        CHECK(r.verdict());
      }
  }
  const auto s3 = build("S3");
  CHECK_THROWS(composition_l1_check(parse_word("x1"), parse_word("x1x2"), s3.group, s3.classes));
}

TEST_CASE("commutator shape equidistribution") {
  for (const char* name : {"C3", "S3", "A4", "S4", "A5", "PSL2(7)", "A6"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto table = character_table(b.group, b.classes);
    for (std::uint32_t m = 1; m <= 3; ++m) {
      if (m == 3 && b.group.order() > 360) continue;
      for (const auto& shape : CommutatorShape::all(m)) {
        CAPTURE(shape.to_string());
        const auto r = shape_equidistribution_check(shape, b.group, b.classes, table);
        CHECK(r.verdict);
        if (m == 1) CHECK(r.applicable);
      }
    }
  }
  // A6 m = 2 is the one desk-scale case with gamma < 1
  const auto a6 = build("A6");
  const auto t6 = character_table(a6.group, a6.classes);
  const auto r = shape_equidistribution_check(CommutatorShape::parse("[x1,x2]"), a6.group, a6.classes, t6);
  CHECK(r.gamma < 1);
  CHECK(r.applicable);
}

TEST_CASE("pairwise generated commutator image") {
  const auto a5 = build("A5");
  const auto shape = CommutatorShape::parse("[[x1,x2],[x3,x4]]");
  const auto exact = pairwise_generated_image(shape, a5.group, a5.classes);
  CHECK(exact.exhaustive);
  CHECK(exact.conjugation_closed);
  CHECK(exact.qualifying > 0);
  CHECK(exact.count > 0);

  BruteOptions opt;
  opt.mode = BruteMode::sampled;
  opt.samples = 200000;
  opt.seed = 11;
  const auto sampled = pairwise_generated_image(shape, a5.group, a5.classes, opt);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.count <= exact.count);
  for (Elem g = 0; g < a5.group.order(); ++g)
    if (sampled.covered[g]) CHECK(exact.covered[g]);

  // pairs only: the commutators of generating pairs
  const auto pairs = pairwise_generated_image(CommutatorShape::parse("[x1,x2]"), a5.group, a5.classes);
  CHECK(pairs.qualifying == 2280);
  // involutions are missed: every pair with an involution commutator lies in the A4 containing it
  CHECK(pairs.count == 44);
  CHECK_FALSE(pairs.covered[0]);
  for (Elem g = 1; g < a5.group.order(); ++g) CHECK(pairs.covered[g] == (a5.group.element_order(g) != 2));
}
