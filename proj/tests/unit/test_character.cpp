#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "cgw/character.hpp"
#include "cgw/cyclotomic.hpp"
#include "cgw/error.hpp"
#include "cgw/modular.hpp"
#include "oracles/brute_force.hpp"
#include "oracles/murnaghan_nakayama.hpp"

using namespace cgw;

namespace {

struct Built {
  Group group;
  ClassData classes;
  CharacterTable table;
};

Built build(const char* name) {
  Group g = Group::from_string(name);
  ClassData cd = conjugacy_classes(g);
  CharacterTable t = character_table(g, cd);
  return {g, cd, t};
}

oracle::Partition cycle_type(const Group& g, Elem e) {
  const auto& p = g.permutation(e);
  const std::uint32_t n = g.degree();
  std::vector<bool> seen(n, false);
  oracle::Partition out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::uint32_t j = i; !seen[j]; j = p.img[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

void check_table_invariants(const Built& b) {
  const auto& t = b.table;
  const std::size_t k = t.class_count();
  REQUIRE(t.count() == k);
  const double order = static_cast<double>(t.group_order);
  std::uint64_t sum_sq = 0;
  for (std::size_t i = 0; i < k; ++i) {
    sum_sq += std::uint64_t{t.degrees[i]} * t.degrees[i];
    CHECK(t.group_order % t.degrees[i] == 0);
    CHECK(t.exact(i, 0) == Cyclotomic::from_powers(1, {static_cast<std::int64_t>(t.degrees[i])}));
    for (std::size_t s = 0; s < k; ++s) {
      CHECK(std::abs(t.exact(i, s).to_complex() - t.values[i][s]) < 1e-10);
      CHECK(std::abs(t.values[i][s]) <= t.degrees[i] + 1e-9);
      std::complex<double> row = 0.0, col = 0.0;
      for (std::size_t u = 0; u < k; ++u) {
        row += static_cast<double>(t.class_sizes[u]) * t.values[i][u] * std::conj(t.values[s][u]);
        col += t.values[u][i] * std::conj(t.values[u][s]);
      }
      CHECK(std::abs(row / order - (i == s ? 1.0 : 0.0)) < 1e-8);
      CHECK(std::abs(col - (i == s ? order / static_cast<double>(t.class_sizes[i]) : 0.0)) < 1e-8);
    }
    // real iff chi(g) = chi(g^-1) on every class
    bool inverse_closed = true;
    for (std::size_t s = 0; s < k; ++s)
      if (!(t.exact(i, s) == t.exact(i, t.inverse_class[s]))) inverse_closed = false;
    CHECK(t.real[i] == inverse_closed);
  }
  CHECK(sum_sq == t.group_order);
  // trivial character first, degrees ascending afterwards
  for (std::size_t s = 0; s < k; ++s) CHECK(t.mult[0][s][0] == 1);
  for (std::size_t i = 2; i < k; ++i) CHECK(t.degrees[i - 1] <= t.degrees[i]);
}

}  // namespace

TEST_CASE("cyclotomic polynomials and reduction") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // 105 is the first index with a coefficient of absolute value 2
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(*std::min_element(p105.begin(), p105.end()) == -2);
  for (std::uint32_t n = 1; n <= 60; ++n) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
  // 1 + zeta + ... + zeta^(n-1) = 0 for n > 1
  for (std::uint32_t n = 2; n <= 30; ++n) {
    const auto z = Cyclotomic::from_powers(n, std::vector<std::int64_t>(n, 1));
    CHECK(z.is_integer());
    CHECK(z.integer_value() == 0);
  }
  // zeta_5 + zeta_5^4 = (sqrt5 - 1)/2
  const auto golden = Cyclotomic::from_powers(5, {0, 1, 0, 0, 1});
  CHECK_FALSE(golden.is_integer());
  CHECK_THROWS_AS(golden.integer_value(), VerificationError);
  CHECK(std::abs(golden.to_complex() - std::complex<double>((std::sqrt(5.0) - 1) / 2, 0)) < 1e-12);
}

TEST_CASE("modular helpers") {
  CHECK(modp::primitive_root(7) == 3);
  CHECK(modp::primitive_root(2521) != 0);
  CHECK(dixon_prime(840, 40320) == 2521);
  CHECK(dixon_prime(510, 4080) == 1021);
  CHECK(dixon_prime(1, 1) == 3);
  // characteristic polynomial of a companion matrix
  const std::uint32_t p = 101;
  modp::Matrix c{{0, 0, 6}, {1, 0, p - 11}, {0, 1, 6}};  // x^3 - 6x^2 + 11x - 6
  CHECK(modp::charpoly(c, p) == modp::Row{p - 6, 11, p - 6, 1});
  modp::Matrix m{{1, 2}, {2, 4}};
  CHECK(modp::nullspace(m, 2, p).size() == 1);
}

TEST_CASE("class algebra") {
  for (const char* name : {"C3", "S3", "A4", "A5", "S4", "PSL2(7)", "S3xC2"}) {
    CAPTURE(name);
    const Group g = Group::from_string(name);
    const auto cd = conjugacy_classes(g);
    const auto alg = class_algebra(g, cd);
    CHECK(alg.constants == oracle::structure_constants(g, cd));
    const std::size_t k = cd.count();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t s = 0;
        for (std::size_t t = 0; t < k; ++t) {
          s += alg.at(i, j, t) * cd.classes[t].size;
          CHECK(alg.at(i, j, t) == alg.at(j, i, t));
          CHECK(alg.at(0, j, t) == (j == t ? 1u : 0u));
        }
        CHECK(s == cd.classes[i].size * cd.classes[j].size);
      }
  }
  const Group s3 = Group::from_string("S3");
  const auto alg = class_algebra(s3, conjugacy_classes(s3));
  CHECK(alg.at(1, 1, 0) == 3);
  const Group c3 = Group::from_string("C3");
  const auto cd3 = conjugacy_classes(c3);
  const auto a3 = class_algebra(c3, cd3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t t = 0; t < 3; ++t) {
        const Elem prod = c3.mul(cd3.classes[i].representative, cd3.classes[j].representative);
        CHECK(a3.at(i, j, t) == (prod == cd3.classes[t].representative ? 1u : 0u));
      }
}

TEST_CASE("character table examples") {
  CHECK(build("S3").table.degrees == std::vector<std::uint32_t>{1, 1, 2});
  CHECK(build("A5").table.degrees == std::vector<std::uint32_t>{1, 3, 3, 4, 5});
  CHECK(build("PSL2(7)").table.degrees == std::vector<std::uint32_t>{1, 3, 3, 6, 7, 8});
  CHECK(build("C1").table.degrees == std::vector<std::uint32_t>{1});
  const auto c3 = build("C3");
  CHECK(c3.table.degrees == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(real_characters(c3.table) == std::vector<std::size_t>{0});
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t t = 1; t < 3; ++t) CHECK(std::abs(std::pow(c3.table.values[i][t], 3) - 1.0) < 1e-12);
  CHECK(real_characters(build("A5").table).size() == 5);
  CHECK(real_characters(build("S3").table).size() == 3);
  CHECK(real_characters(build("PSL2(7)").table).size() == 4);

  // A5: the two degree-3 characters take (1 +- sqrt5)/2 on the 5-cycles
  const auto a5 = build("A5");
  const double g1 = (1 + std::sqrt(5.0)) / 2, g2 = (1 - std::sqrt(5.0)) / 2;
  const auto v = a5.table.values;
  const bool order1 = std::abs(v[1][3].real() - g1) < 1e-12 && std::abs(v[1][4].real() - g2) < 1e-12;
  const bool order2 = std::abs(v[1][3].real() - g2) < 1e-12 && std::abs(v[1][4].real() - g1) < 1e-12;
  CHECK((order1 || order2));
  CHECK(a5.table.prime == dixon_prime(30, 60));
}

TEST_CASE("table invariants on every supported small group") {
  for (const char* name : {"C1", "C2", "C7", "C12", "S2", "S3", "S4", "S5", "A4", "A5", "A6", "A7", "PSL2(2)", "PSL2(3)",
                           "PSL2(4)", "PSL2(5)", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL2(11)", "PSL2(13)", "PSL2(16)",
                           "S3xC2", "A4xC2", "C2xC3", "C60"}) {
    CAPTURE(name);
    check_table_invariants(build(name));
  }
  CHECK_THROWS_AS(build("C61"), CapExceededError);
}

TEST_CASE("symmetric group tables agree with Murnaghan-Nakayama") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto b = build(("S" + std::to_string(n)).c_str());
    const std::size_t k = b.classes.count();
    // Oracle rows indexed by partition; compare as a multiset of rows.
    std::vector<std::vector<long long>> expected, actual;
    for (const auto& shape : oracle::partitions(n)) {
      std::vector<long long> row;
      for (std::size_t t = 0; t < k; ++t)
        row.push_back(oracle::mn_character(shape, cycle_type(b.group, b.classes.classes[t].representative)));
      expected.push_back(row);
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<long long> row;
      for (std::size_t t = 0; t < k; ++t) row.push_back(b.table.exact(i, t).integer_value());
      actual.push_back(row);
      CHECK(b.table.real[i]);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    CHECK(expected == actual);
    if (n == 8) CHECK(b.table.prime == 2521);
  }
}

TEST_CASE("large alternating group") {
  const auto b = build("A9");
  CHECK(b.table.count() == 18);
  check_table_invariants(b);
}

TEST_CASE("character of a permutation action agrees with fixed points") {
  // 1 + (standard) is the permutation character; the standard character of
  // S_n has degree n - 1 and is the unique such with value f - 1 everywhere.
  const auto b = build("S6");
  bool found = false;
  for (std::size_t i = 0; i < b.table.count(); ++i) {
    bool ok = true;
    for (std::size_t t = 0; t < b.classes.count(); ++t)
      if (b.table.exact(i, t).integer_value() != static_cast<std::int64_t>(b.group.fixed_points(b.classes.classes[t].representative)) - 1) ok = false;
    found = found || ok;
  }
  CHECK(found);
}
