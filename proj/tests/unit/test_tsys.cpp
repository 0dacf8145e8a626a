#include <doctest.h>

#include <set>

#include "cgw/character.hpp"
#include "cgw/error.hpp"
#include "cgw/spectral.hpp"
#include "cgw/tsys.hpp"
#include "oracles/orbits.hpp"

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

std::set<oracle::Tuple> as_set(const GeneratingTupleSet& v) {
  std::set<oracle::Tuple> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.insert(v.tuple(i));
  return out;
}

}  // namespace

TEST_CASE("generating tuple counts") {
  const auto c2 = build("C2");
  CHECK(generating_tuples(c2.group, c2.classes, 2).size() == 3);
  const auto s3 = build("S3");
  CHECK(generating_tuples(s3.group, s3.classes, 2).size() == 36 - (9 + 3 * 4 - 3));
  const auto a5 = build("A5");
  CHECK(generating_tuples(a5.group, a5.classes, 2).size() == 2280);
  CHECK_THROWS_AS(generating_tuples(a5.group, a5.classes, 4), std::invalid_argument);
  const auto a6 = build("A6");
  CHECK_THROWS_AS(generating_tuples(a6.group, a6.classes, 3), CapExceededError);
}

TEST_CASE("generating tuples agree with naive closure") {
  for (const char* name : {"C1", "C2", "C6", "S3", "A4", "C2xC3", "S4", "A5", "PSL2(7)"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto v = generating_tuples(b.group, b.classes, 2);
    CHECK(as_set(v) == oracle::generating_tuples(b.group, 2));
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v.index_of(v.tuple(i)) == static_cast<std::int64_t>(i));
  }
  for (const char* name : {"C2", "C6", "S3", "A4"}) {
    CAPTURE(name);
    const auto b = build(name);
    CHECK(as_set(generating_tuples(b.group, b.classes, 3)) == oracle::generating_tuples(b.group, 3));
  }
}

TEST_CASE("tuple sets are conjugation invariant") {
  const auto b = build("S4");
  const auto v = generating_tuples(b.group, b.classes, 3);
  for (std::size_t i = 0; i < v.size(); i += 7)
    for (Elem h : b.group.generators()) {
      auto t = v.tuple(i);
      for (auto& x : t) x = b.group.conj(x, h);
      CHECK(v.contains(t));
    }
}

TEST_CASE("nielsen moves") {
  const Group s3 = Group::from_string("S3");
  const Elem x = perm(s3, "(1 2)"), y = perm(s3, "(1 3)");
  const std::vector<Elem> t{x, y};
  std::vector<Elem> u = t;
  apply_move(s3, {MoveKind::invert, 0, 0}, u);
  CHECK(u == std::vector<Elem>{s3.inv(x), y});
  u = t;
  apply_move(s3, {MoveKind::swap, 0, 1}, u);
  CHECK(u == std::vector<Elem>{y, x});
  u = t;
  apply_move(s3, {MoveKind::right, 0, 1}, u);
  // (1 2) then (1 3): 1 -> 2, 2 -> 1 -> 3, 3 -> 1
  CHECK(u == std::vector<Elem>{perm(s3, "(1 2 3)"), y});
  u = t;
  apply_move(s3, {MoveKind::left, 0, 1}, u);
  CHECK(u == std::vector<Elem>{perm(s3, "(1 3 2)"), y});

  CHECK(MoveSet(2, false).moves().size() == 8);
  CHECK(MoveSet(2, true).moves().size() == 11);
  CHECK(MoveSet(3, false).moves().size() == 24);
  CHECK(nielsen_neighbors(s3, t, MoveSet(2, true)).size() == 11);
  CHECK(to_string(Move{MoveKind::left_inverse, 1, 0}) == "L-(2,1)");

  // every move is undone by another move of the set
  const auto a4 = build("A4");
  const auto v = generating_tuples(a4.group, a4.classes, 2);
  const MoveSet ext(2, true);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto tup = v.tuple(i);
    for (const auto& n1 : nielsen_neighbors(a4.group, tup, ext)) {
      CHECK(v.contains(n1));
      bool back = false;
      for (const auto& n2 : nielsen_neighbors(a4.group, n1, ext)) back = back || n2 == tup;
      CHECK(back);
    }
  }
}

TEST_CASE("components agree with naive orbits") {
  for (const char* name : {"C2", "C5", "S3", "A4", "C2xC3", "S4", "A5"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto v = generating_tuples(b.group, b.classes, 2);
    const auto verts = oracle::generating_tuples(b.group, 2);
    for (bool ext : {false, true}) {
      const auto cs = graph_components(b.group, v, MoveSet(2, ext));
      const auto naive = oracle::orbits(b.group, verts, ext);
      CHECK(cs.count() == naive.size());
      std::uint64_t total = 0;
      for (const auto& c : cs.components) total += c.size;
      CHECK(total == v.size());
    }
    if (std::string(name) != "C2xC3") {
      const auto act = automorphism_action(b.group);
      CHECK(t_systems(b.group, v, act).count() == oracle::orbits(b.group, verts, true, act.maps).size());
    }
  }
}

TEST_CASE("T-systems") {
  for (const char* name : {"C2", "C5", "C12", "S3"}) {
    const auto b = build(name);
    CHECK(t_systems(b.group, generating_tuples(b.group, b.classes, 2), automorphism_action(b.group)).count() == 1);
  }
  // two classical systems on pairs: commutator of order 3 or of order 5
  const auto a5 = build("A5");
  const auto v = generating_tuples(a5.group, a5.classes, 2);
  const auto act = automorphism_action(a5.group);
  CHECK(t_systems(a5.group, v, act).count() == 2);
  const auto a6 = build("A6");
  CHECK_THROWS_AS(automorphism_action(a6.group), UnsupportedError);
}

TEST_CASE("component inequality chain") {
  for (const char* name : {"C2", "C5", "S3", "A4", "S4", "A5", "PSL2(7)"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto act = automorphism_action(b.group);
    const auto chain = component_chain(b.group, generating_tuples(b.group, b.classes, 2), act);
    CHECK(chain.verdict());
  }
  const auto s3 = build("S3");
  const auto chain3 = component_chain(s3.group, generating_tuples(s3.group, s3.classes, 3), automorphism_action(s3.group));
  CHECK(chain3.verdict());
  CHECK(chain3.plain == 1);
}

TEST_CASE("commutator class and labels") {
  const auto s3 = build("S3");
  const auto act3 = automorphism_action(s3.group);
  const auto orb3 = aut_class_orbits(s3.group, s3.classes, act3);
  const std::vector<Elem> pair{perm(s3.group, "(1 2)"), perm(s3.group, "(1 2 3)")};
  const auto label = higman_invariant(s3.group, pair, s3.classes, orb3);
  CHECK(label == HigmanLabel{s3.classes.class_of[perm(s3.group, "(1 2 3)")]});

  const auto p7 = build("PSL2(7)");
  const auto act7 = automorphism_action(p7.group);
  const auto orb7 = aut_class_orbits(p7.group, p7.classes, act7);
  const auto v7 = generating_tuples(p7.group, p7.classes, 2);
  bool found = false;
  for (std::size_t i = 0; i < v7.size() && !found; ++i) {
    const auto t = v7.tuple(i);
    if (p7.group.element_order(p7.group.commutator(t[0], t[1])) != 7) continue;
    found = true;
    const auto l = higman_invariant(p7.group, t, p7.classes, orb7);
    REQUIRE(l.size() == 2);
    CHECK(p7.classes.classes[l[0]].label == "7A");
    CHECK(p7.classes.classes[l[1]].label == "7B");
  }
  CHECK(found);

  for (const char* name : {"S3", "A4", "A5", "PSL2(7)"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto act = automorphism_action(b.group);
    const auto orb = aut_class_orbits(b.group, b.classes, act);
    const auto v = generating_tuples(b.group, b.classes, 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto t = v.tuple(i);
      const auto l = higman_invariant(b.group, t, b.classes, orb);
      CHECK(l == higman_invariant(b.group, std::vector<Elem>{t[1], t[0]}, b.classes, orb));
      CHECK(std::find(l.begin(), l.end(), 0u) == l.end());
    }
    CHECK(higman_constant_on_components(b.group, v, b.classes, orb, t_systems(b.group, v, act)));
    CHECK(pra_component_invariant_check(b.group, v, b.classes).verdict());
  }
}

TEST_CASE("invariant census") {
  const auto c5 = build("C5");
  const auto cen5 = t2_invariant_census(c5.group, generating_tuples(c5.group, c5.classes, 2), c5.classes,
                                        automorphism_action(c5.group));
  CHECK(cen5.size() == 1);
  CHECK(cen5.labels.front() == HigmanLabel{0});
  CHECK(cen5.bound == doctest::Approx(5.0 / 8));

  for (const char* name : {"S3", "A5", "PSL2(7)", "PSL2(8)"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto act = automorphism_action(b.group);
    const auto v = generating_tuples(b.group, b.classes, 2);
    const auto cen = t2_invariant_census(b.group, v, b.classes, act);
    CHECK(cen.size() >= 1);
    CHECK(cen.size() <= t_systems(b.group, v, act).count());
  }
  const auto a5 = build("A5");
  const auto cen = t2_invariant_census(a5.group, generating_tuples(a5.group, a5.classes, 2), a5.classes,
                                       automorphism_action(a5.group));
  CHECK(cen.size() == 2);
  CHECK(cen.min_centralizer == 3);
  CHECK(cen.out_order == 2);
  CHECK(cen.bound == doctest::Approx(0.75));
}

TEST_CASE("product replacement walk") {
  const Group a5 = Group::from_string("A5");
  CHECK(first_generating_tuple(a5, 2).size() == 2);
  CHECK(is_generating_tuple(a5, first_generating_tuple(a5, 4)));
  CHECK(first_generating_tuple(a5, 3)[0] == 0);
  CHECK_THROWS_AS(first_generating_tuple(Group::from_string("C2xC2"), 1), UnsupportedError);

  WalkParams p;
  p.k = 3;
  p.steps = 0;
  p.burn_in = 0;
  p.samples = 1;
  const auto single = pra_walk(a5, p);
  CHECK(std::find(single.start.begin(), single.start.end(), single.samples[0]) != single.start.end());

  p.steps = 1;
  p.burn_in = 1000;
  p.samples = 100000;
  p.seed = 42;
  const auto w = pra_walk(a5, p);
  CHECK(w.l1_to_uniform < 0.15);
  CHECK(pra_walk(a5, p).samples == w.samples);
  p.seed = 43;
  CHECK(pra_walk(a5, p).samples != w.samples);

  p.k = 1;
  CHECK_THROWS_AS(pra_walk(a5, p), std::invalid_argument);
  p.k = 6;
  CHECK_THROWS_AS(pra_walk(a5, p), std::invalid_argument);
  p.k = 5;
  p.samples = 1000;
  CHECK(pra_walk(a5, p).samples.size() == 1000);
}

TEST_CASE("walks from two seeds converge") {
  const Group a5 = Group::from_string("A5");
  WalkParams p;
  p.samples = 1000000;
  p.seed = 1;
  const auto a = pra_walk(a5, p);
  p.seed = 2;
  const auto b = pra_walk(a5, p);
  CHECK(walk_l1_between(a, b) < 0.05);
}

TEST_CASE("commutators of generating pairs") {
  const auto a5 = build("A5");
  const auto t5 = character_table(a5.group, a5.classes);
  const auto cov = commutator_generating_coverage(a5.group, generating_tuples(a5.group, a5.classes, 2),
                                                  delta_epsilon(t5).epsilon);
  CHECK_FALSE(cov.covered[0]);
  CHECK(cov.count == 44);
  CHECK(cov.fraction == Rational(44, 60));
  CHECK(cov.pair_fraction == Rational(2280, 3600));
  CHECK(cov.holds);
  CHECK(cov.vacuous);

  for (const char* name : {"S3", "A4", "PSL2(7)"}) {
    const auto b = build(name);
    const auto t = character_table(b.group, b.classes);
    const auto c = commutator_generating_coverage(b.group, generating_tuples(b.group, b.classes, 2),
                                                  delta_epsilon(t).epsilon);
    CHECK_FALSE(c.covered[0]);
    CHECK(c.holds);
  }
}
