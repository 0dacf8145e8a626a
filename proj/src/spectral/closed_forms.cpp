#include <cmath>
#include <numeric>
#include <string>

#include "cgw/error.hpp"
#include "cgw/finite_field.hpp"
#include "cgw/spectral.hpp"

namespace cgw {

std::string to_string(Psl2ElementKind kind) {
  switch (kind) {
    case Psl2ElementKind::split: return "split";
    case Psl2ElementKind::nonsplit: return "nonsplit";
    case Psl2ElementKind::unipotent: return "unipotent";
  }
  return "?";
}

Rational psl2_delta_closed_form(std::uint32_t q, Psl2ElementKind kind, std::uint32_t exponent) {
  std::uint32_t p = 0, n = 0;
  if (!prime_power_decompose(q, p, n)) throw UnsupportedError(std::to_string(q) + " is not a prime power");
  const bool even = (p == 2);
  const bool one_mod_4 = !even && q % 4 == 1;
  const Rational rq(q);
  switch (kind) {
    case Psl2ElementKind::split: {
      const int alpha = one_mod_4 ? (exponent % 2 == 0 ? 2 : -4) : -1;
      return Rational(1) / rq + Rational(alpha) / (rq + 1);
    }
    case Psl2ElementKind::nonsplit: {
      const int beta = (one_mod_4 || even) ? 1 : (exponent % 2 == 0 ? -2 : 4);
      return Rational(-1) / rq + Rational(beta) / (rq - 1);
    }
    case Psl2ElementKind::unipotent:
      if (one_mod_4) return Rational(1) / (2 * (rq + 1));
      if (!even) return Rational(-1) / (rq + 1) - Rational(3) / (2 * (rq - 1));
      return Rational(-3) / (2 * (rq + 1)) - Rational(1) / (2 * (rq - 1));
  }
  throw std::invalid_argument("unknown element kind");
}

std::vector<Psl2DeltaRow> psl2_delta_rows(const Group& g, const ClassData& classes, const FiberTable& fibers) {
  if (g.family() != Family::psl2) throw UnsupportedError(g.name() + " is not PSL2(q)");
  const std::uint32_t q = g.descriptor().parameter;
  const std::uint32_t p = g.field().characteristic();
  const std::uint32_t center = (p == 2) ? 1 : 2;
  std::vector<Psl2DeltaRow> rows;

  auto torus_rows = [&](Psl2ElementKind kind, std::uint32_t order) {
    if (order <= 1) return;
    std::uint32_t t = 0;
    bool found = false;
    for (std::size_t c = 0; c < classes.count(); ++c) {
      if (classes.classes[c].element_order == order) {
        t = static_cast<std::uint32_t>(c);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no element of order " + std::to_string(order) + " in " + g.name());
    for (std::uint32_t l = 1; l < order; ++l) {
      Psl2DeltaRow row{kind, l, classes.power_map(t, l), psl2_delta_closed_form(q, kind, l), 0};
      row.from_table = fibers.normalized(row.class_index) - 1;
      rows.push_back(std::move(row));
    }
  };
  torus_rows(Psl2ElementKind::split, (q - 1) / center);
  torus_rows(Psl2ElementKind::nonsplit, (q + 1) / center);
  for (std::size_t c = 0; c < classes.count(); ++c) {
    if (classes.classes[c].element_order != p) continue;
    Psl2DeltaRow row{Psl2ElementKind::unipotent, 1, static_cast<std::uint32_t>(c),
                     psl2_delta_closed_form(q, Psl2ElementKind::unipotent, 1), 0};
    row.from_table = fibers.normalized(c) - 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

double sn_bound_delta(std::uint32_t n, std::uint32_t f) {
  if (f == 0 || f >= n) throw std::domain_error("the bound needs 1 <= f < n");
  const double ln = std::log(static_cast<double>(n));
  const double inner = (1.0 / (1.0 - 1.0 / ln)) * 12.0 * ln / std::log(static_cast<double>(n) / f) + 18.0;
  return 1.0 / inner;
}

SnBoundReport sn_character_bound_check(const Group& sn, const ClassData& classes, const CharacterTable& table) {
  if (sn.family() != Family::symmetric) throw UnsupportedError(sn.name() + " is not a symmetric group");
  const std::uint32_t n = sn.degree();
  if (n < 5 || n > 8) throw UnsupportedError("the symmetric character bound is checked for 5 <= n <= 8");
  SnBoundReport rep;
  rep.n = n;
  for (std::size_t t = 0; t < classes.count(); ++t) {
    SnBoundRow row;
    row.class_index = static_cast<std::uint32_t>(t);
    row.fixed_points = sn.fixed_points(classes.classes[t].representative);
    if (row.fixed_points == 0 || row.fixed_points >= n) {
      row.skipped = true;
      rep.rows.push_back(row);
      continue;
    }
    row.delta = sn_bound_delta(n, row.fixed_points);
    for (std::size_t chi = 0; chi < table.count(); ++chi) {
      const double value = std::abs(table.values[chi][t]);
      const double degree = table.degrees[chi];
      const double bound = std::pow(degree, 1.0 - row.delta);
      if (value > bound * (1.0 + 1e-12)) ++row.violations;
      if (degree > 1 && value > 0) row.worst_ratio = std::max(row.worst_ratio, std::log(value) / std::log(degree));
    }
    rep.violations += row.violations;
    rep.rows.push_back(row);
  }
  return rep;
}

FixedPointTail an_fixed_point_tail(std::uint32_t n, std::uint32_t f) {
  if (f < 1 || f > n) throw std::domain_error("the tail bound needs 1 <= f <= n");
  if (n < 3 || n > 9) throw UnsupportedError("exact fixed-point fractions need 3 <= n <= 9");
  FixedPointTail tail;
  tail.n = n;
  tail.f = f;
  BigInt factorial = 1;
  for (std::uint32_t i = 2; i <= f; ++i) factorial *= i;
  tail.bound = Rational(BigInt(2), factorial);
  GroupDescriptor d;
  d.family = Family::alternating;
  d.parameter = n;
  const Group an(d);
  const ClassData classes = conjugacy_classes(an);
  std::uint64_t count = 0;
  for (const auto& c : classes.classes)
    if (an.fixed_points(c.representative) >= f) count += c.size;
  tail.exact_fraction = Rational(count, an.order());
  tail.holds = tail.exact_fraction <= tail.bound;
  return tail;
}

}  // namespace cgw
