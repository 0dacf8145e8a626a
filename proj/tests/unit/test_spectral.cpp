#include <doctest.h>

#include <cmath>
#include <random>

#include "cgw/automorphism.hpp"
#include "cgw/error.hpp"
#include "cgw/spectral.hpp"
#include "oracles/brute_force.hpp"

using namespace cgw;

namespace {

struct Built {
  Group group;
  ClassData classes;
  CharacterTable table;
};

Built build(const std::string& name) {
  Group g = Group::from_string(name);
  ClassData cd = conjugacy_classes(g);
  CharacterTable t = character_table(g, cd);
  return {g, cd, t};
}

std::vector<std::uint64_t> per_class(const Built& b, const std::vector<std::uint64_t>& per_element) {
  std::vector<std::uint64_t> out;
  for (std::size_t t = 0; t < b.classes.count(); ++t) {
    const auto& m = b.classes.members[t];
    for (Elem x : m) CHECK(per_element[x] == per_element[m.front()]);
    out.push_back(per_element[m.front()]);
  }
  return out;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(exact_rational(0.5) == Rational(1, 2));
  CHECK(exact_rational(-3.0) == Rational(-3));
  CHECK(exact_rational(0.1) != Rational(1, 10));
  CHECK(to_double(exact_rational(0.1)) == 0.1);
  CHECK(to_string(Rational(-10, 21)) == "-10/21");
  CHECK(to_string(Rational(4)) == "4");
  const Rational two(2);
  const double r = sqrt_upper(two);
  CHECK(exact_rational(r) * exact_rational(r) >= two);
  CHECK(exact_rational(std::nextafter(r, 0.0)) * exact_rational(std::nextafter(r, 0.0)) < two);
  CHECK(sqrt_upper(Rational(9, 4)) == 1.5);
}

TEST_CASE("zeta, delta and epsilon") {
  const auto a5 = build("A5");
  CHECK(witten_zeta(a5.table, 2) == doctest::Approx(1 + 2.0 / 9 + 1.0 / 16 + 1.0 / 25).epsilon(1e-14));
  CHECK(witten_zeta(a5.table, 2) == doctest::Approx(1.324722).epsilon(1e-6));
  const auto de = delta_epsilon(a5.table);
  CHECK(de.delta == doctest::Approx(0.569844).epsilon(1e-6));
  CHECK(de.epsilon == doctest::Approx(0.754880).epsilon(1e-6));
  const auto p7 = build("PSL2(7)");
  CHECK(witten_zeta(p7.table, 2) == doctest::Approx(1.286033).epsilon(1e-6));
  CHECK(delta_epsilon(p7.table).delta == doctest::Approx(0.534821).epsilon(1e-6));
  const auto c6 = build("C6");
  CHECK(witten_zeta(c6.table, 2) == 6);
  CHECK(witten_zeta(c6.table, 0.5) == 6);
  CHECK(delta_epsilon(c6.table).delta * delta_epsilon(c6.table).delta == doctest::Approx(5));
  // monotone in s, tends to 1
  double prev = 1e9;
  for (double s = 0.25; s < 40; s *= 1.5) {
    const double z = witten_zeta(a5.table, s);
    CHECK(z < prev);
    prev = z;
  }
  CHECK(witten_zeta(a5.table, 60) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS(witten_zeta(a5.table, 0));
}

TEST_CASE("frobenius and square-product fibers agree with enumeration") {
  for (const char* name : {"C1", "C2", "C3", "C6", "S3", "A4", "S4", "A5", "PSL2(7)", "PSL2(8)", "S3xC2", "A4xC2"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto f = frobenius_fibers(b.table);
    CHECK(f.counts == per_class(b, oracle::commutator_fibers(b.group)));
    const auto s = squares_word_fibers(b.table);
    CHECK(s.counts == per_class(b, oracle::square_product_fibers(b.group)));
    CHECK(f.counts[0] == b.group.order() * b.classes.count());
    CHECK_NOTHROW(f.verify_conservation());
    CHECK_NOTHROW(s.verify_conservation());
    // constant on Aut-orbits of classes where automorphisms are available
    if (b.group.family() != Family::product) {
      const auto orbits = aut_class_orbits(b.group, b.classes, automorphism_action(b.group));
      for (std::size_t t = 0; t < b.classes.count(); ++t)
        CHECK(f.counts[t] == f.counts[orbits.orbits[orbits.orbit_of_class[t]].front()]);
    }
  }
  const auto p7 = frobenius_fibers(build("PSL2(7)").table);
  CHECK(p7.counts == std::vector<std::uint64_t>{1008, 88, 171, 256, 105, 105});
  const auto a5 = frobenius_fibers(build("A5").table);
  CHECK(a5.counts[0] == 300);
  CHECK(a5.counts[3] == 65);
  CHECK(a5.counts[4] == 65);
  CHECK(frobenius_fibers(build("S3").table).counts[1] == 0);
  CHECK(squares_word_fibers(build("C2").table).counts == std::vector<std::uint64_t>{4, 0});
  CHECK(squares_word_fibers(build("C3").table).counts == std::vector<std::uint64_t>{3, 3, 3});
  CHECK(squares_word_fibers(build("A5").table).counts == a5.counts);
}

TEST_CASE("fiber tables reject corrupted totals") {
  auto f = frobenius_fibers(build("S3").table);
  f.class_totals[0] += 1;
  CHECK_THROWS_AS(f.verify_conservation(), VerificationError);
}

TEST_CASE("fourier coefficients and distances") {
  const auto a5 = build("A5");
  const auto comm = Distribution::from_fibers(frobenius_fibers(a5.table));
  CHECK(comm.total_mass() == 1);
  const auto fr = fourier_coefficients(comm, a5.table);
  for (std::size_t chi = 0; chi < a5.table.count(); ++chi)
    CHECK(std::abs(fr.coefficients[chi] - 1.0 / a5.table.degrees[chi]) < 1e-12);
  const auto uni = Distribution::uniform(60, a5.table.class_sizes);
  const auto fu = fourier_coefficients(uni, a5.table);
  CHECK(std::abs(fu.coefficients[0] - 1.0) < 1e-12);
  for (std::size_t chi = 1; chi < a5.table.count(); ++chi) CHECK(std::abs(fu.coefficients[chi]) < 1e-12);
  const auto point = Distribution::identity_mass(60, a5.table.class_sizes);
  const auto fp = fourier_coefficients(point, a5.table);
  for (std::size_t chi = 0; chi < a5.table.count(); ++chi) CHECK(std::abs(fp.coefficients[chi] - double(a5.table.degrees[chi])) < 1e-12);

  CHECK(l1_distance(comm, comm) == 0);
  CHECK(l1_distance(point, uni) == Rational(2) * (1 - Rational(1, 60)));
  const Rational d = l1_distance(comm, uni);
  CHECK(to_double(d) <= delta_epsilon(a5.table).delta);
  CHECK(l1_to_uniform(comm) == doctest::Approx(to_double(d)).epsilon(1e-12));
  CHECK(l1_to_uniform_exact(frobenius_fibers(a5.table)) == d);
  // invalid distribution
  auto bad = comm;
  bad.mass_float[0] += 0.5;
  CHECK_THROWS_AS(fourier_coefficients(bad, a5.table), VerificationError);
}

TEST_CASE("deviation bound |Delta| <= E") {
  for (const char* name : {"A5", "PSL2(7)", "PSL2(11)", "S4", "A6"}) {
    const auto b = build(name);
    for (const auto& row : deviation_report(frobenius_fibers(b.table), b.table)) CHECK(row.within);
  }
}

TEST_CASE("equidistribution witness") {
  const auto a5 = build("A5");
  const auto f = frobenius_fibers(a5.table);
  const auto w = equidistribution_witness(f, delta_epsilon(a5.table).epsilon);
  CHECK(w.verdict());
  CHECK(w.classes.front() != 0);  // identity excluded: N(1)/60 = 5
  CHECK(w.size == 59);
  // uniform fibers
  FiberTable u = f;
  for (std::size_t t = 0; t < u.class_count(); ++t) {
    u.counts[t] = 60;
    u.class_totals[t] = 60 * u.class_sizes[t];
  }
  CHECK(equidistribution_witness(u, 1e-6).size == 60);
  CHECK(equidistribution_witness(u, 1e-6).verdict());
  // point mass
  FiberTable pm = f;
  for (std::size_t t = 0; t < pm.class_count(); ++t) pm.counts[t] = pm.class_totals[t] = 0;
  pm.counts[0] = pm.class_totals[0] = 3600;
  CHECK_FALSE(equidistribution_witness(pm, 0.1).verdict());
  CHECK_THROWS(equidistribution_witness(pm, 0.0));
}

TEST_CASE("measure preservation") {
  const auto a5 = build("A5");
  const auto f = frobenius_fibers(a5.table);
  const Rational eps = exact_rational(delta_epsilon(a5.table).epsilon);
  auto all = measure_preservation_check(f, a5.table.class_sizes, eps);
  CHECK(all.preimage_mass == 1);
  CHECK(all.target_mass == 1);
  auto none = measure_preservation_check(f, std::vector<std::uint64_t>(5, 0), eps);
  CHECK(none.preimage_mass == 0);
  CHECK(none.verdict);
  std::vector<Elem> fives;
  for (std::size_t t : {3u, 4u})
    for (Elem x : a5.classes.members[t]) fives.push_back(x);
  auto m = measure_preservation_check(f, a5.classes, fives, eps);
  CHECK(m.preimage_mass == Rational(24 * 65, 3600));
  CHECK(m.target_mass == Rational(24, 60));
  CHECK(m.verdict);
}

TEST_CASE("commutator counts") {
  const auto a5 = build("A5");
  const auto c = commutator_count_check(frobenius_fibers(a5.table), delta_epsilon(a5.table).delta);
  CHECK(c.count == 60);
  CHECK(c.verdict);
  CHECK(c.bound == doctest::Approx((1 - 0.569844) * 60).epsilon(1e-5));
  const auto s3 = build("S3");
  const auto cs = commutator_count_check(frobenius_fibers(s3.table), delta_epsilon(s3.table).delta);
  CHECK(cs.count == 3);
  CHECK(cs.vacuous);
  const auto c1 = build("C1");
  const auto ct = commutator_count_check(frobenius_fibers(c1.table), delta_epsilon(c1.table).delta);
  CHECK(ct.count == 1);
  CHECK(ct.bound == 1);
  CHECK(ct.verdict);
}

TEST_CASE("PSL2 closed forms") {
  using K = Psl2ElementKind;
  CHECK(psl2_delta_closed_form(7, K::split, 1) == Rational(1, 56));
  CHECK(psl2_delta_closed_form(7, K::unipotent, 1) == Rational(-3, 8));
  CHECK(psl2_delta_closed_form(7, K::nonsplit, 1) == Rational(11, 21));
  CHECK(psl2_delta_closed_form(7, K::nonsplit, 2) == Rational(-10, 21));
  CHECK(psl2_delta_closed_form(5, K::unipotent, 1) == Rational(1, 12));
  CHECK(psl2_delta_closed_form(4, K::nonsplit, 1) == Rational(1, 12));
  CHECK(Rational(65, 60) - 1 == Rational(1, 12));
  CHECK_THROWS_AS(psl2_delta_closed_form(6, K::split, 1), UnsupportedError);

  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    CAPTURE(q);
    const auto b = build("PSL2(" + std::to_string(q) + ")");
    const auto rows = psl2_delta_rows(b.group, b.classes, frobenius_fibers(b.table));
    CHECK(!rows.empty());
    for (const auto& r : rows) {
      CAPTURE(to_string(r.kind));
      CAPTURE(r.exponent);
      CHECK(r.closed_form == r.from_table);
    }
  }
}

TEST_CASE("symmetric group character bound") {
  CHECK(sn_bound_delta(8, 1) > 0);
  CHECK_THROWS(sn_bound_delta(8, 0));
  for (const char* name : {"S5", "S6", "S7", "S8"}) {
    const auto b = build(name);
    const auto rep = sn_character_bound_check(b.group, b.classes, b.table);
    CHECK(rep.violations == 0);
    std::size_t checked = 0;
    for (const auto& r : rep.rows) {
      if (r.fixed_points == 0) CHECK(r.skipped);
      if (!r.skipped) ++checked;
    }
    CHECK(checked > 0);
  }
  const auto s4 = build("S4");
  CHECK_THROWS_AS(sn_character_bound_check(s4.group, s4.classes, s4.table), UnsupportedError);
}

TEST_CASE("fixed point tail") {
  const auto t55 = an_fixed_point_tail(5, 5);
  CHECK(t55.exact_fraction == Rational(1, 60));
  CHECK(t55.bound == Rational(1, 60));
  CHECK(t55.holds);
  CHECK(an_fixed_point_tail(6, 1).bound == 2);
  const auto t73 = an_fixed_point_tail(7, 3);
  CHECK(t73.bound == Rational(1, 3));
  CHECK(t73.holds);
  for (std::uint32_t n = 3; n <= 8; ++n)
    for (std::uint32_t f = 1; f <= n; ++f) CHECK(an_fixed_point_tail(n, f).holds);
  CHECK(an_fixed_point_tail(9, 4).holds);
  CHECK_THROWS(an_fixed_point_tail(9, 0));
}

TEST_CASE("zeta trends") {
  const auto an = zeta_trend_report(Family::alternating, {5, 6, 7, 8, 9}, 2.0);
  CHECK(an.bounded);
  CHECK(an.decreasing);
  CHECK(an.rows[0].scaled == doctest::Approx(25 * (2.0 / 9 + 1.0 / 16 + 1.0 / 25)));
  const auto ps = zeta_trend_report(Family::psl2, {5, 7, 8, 9, 11, 13}, 2.0);
  CHECK(ps.bounded);
  CHECK(ps.decreasing);
  for (const auto& r : ps.rows) CHECK(r.scaled <= 3);
  const auto big = zeta_trend_report(Family::psl2, {5, 7}, 50.0);
  for (const auto& r : big.rows) CHECK(r.zeta_minus_one < 1e-20);
}

TEST_CASE("exact L1 bounds") {
  for (const char* name : {"C6", "S3", "A4", "A5", "S5", "PSL2(7)", "PSL2(8)"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto c = commutator_l1_check(b.table);
    CHECK(c.holds());
    CHECK(c.bound == doctest::Approx(delta_epsilon(b.table).delta).epsilon(1e-14));
    const auto s = squares_l1_check(b.table);
    CHECK(s.holds());
    CHECK(s.bound == doctest::Approx(real_character_bound(b.table)).epsilon(1e-14));
  }
  const auto a5 = build("A5");
  CHECK(zeta_excess_exact(a5.table) == Rational(2, 9) + Rational(1, 16) + Rational(1, 25));
  CHECK(real_excess_exact(a5.table) == zeta_excess_exact(a5.table));
  // abelian: the commutator word is constant, so the distance is maximal and the bound is sqrt(|G| - 1)
  const auto c6 = build("C6");
  CHECK(commutator_l1_check(c6.table).l1 == Rational(10, 6));
  CHECK(commutator_l1_check(c6.table).bound_squared == 5);
}

TEST_CASE("square-root witness") {
  for (const char* name : {"S3", "A5", "PSL2(7)"}) {
    CAPTURE(name);
    const auto b = build(name);
    const auto f = frobenius_fibers(b.table);
    for (const Rational& e : {Rational(1, 2), Rational(3, 4), Rational(1, 10), Rational(9, 10)}) {
      const auto direct = equidistribution_witness(f, e);
      const auto squared = equidistribution_witness_sqrt(f, e * e);
      CHECK(direct.classes == squared.classes);
      CHECK(direct.verdict() == squared.verdict());
      CHECK(squared.epsilon >= e);
      CHECK(to_double(squared.epsilon) == doctest::Approx(to_double(e)).epsilon(1e-15));
    }
    // measured distance d gives a sqrt(d) witness
    CHECK(equidistribution_witness_sqrt(f, l1_to_uniform_exact(f)).verdict());
  }
  const auto a5 = build("A5");
  CHECK_THROWS(equidistribution_witness_sqrt(frobenius_fibers(a5.table), Rational(0)));
}
