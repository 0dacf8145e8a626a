#include <cmath>
#include <string>

#include "cgw/error.hpp"
#include "cgw/spectral.hpp"

namespace cgw {

double witten_zeta(const CharacterTable& table, double s) {
  if (!(s > 0)) throw std::invalid_argument("zeta exponent must be positive");
  double z = 0;
  // largest degrees first so the small terms are not lost against 1
  for (std::size_t i = table.count(); i-- > 0;) z += std::pow(static_cast<double>(table.degrees[i]), -s);
  return z;
}

ZetaSummary delta_epsilon(const CharacterTable& table) {
  ZetaSummary z;
  z.zeta2 = witten_zeta(table, 2.0);
  double excess = 0;
  for (std::size_t i = table.count(); i-- > 1;) excess += 1.0 / (static_cast<double>(table.degrees[i]) * table.degrees[i]);
  z.delta = std::sqrt(excess);
  z.epsilon = std::sqrt(z.delta);
  return z;
}

double real_character_bound(const CharacterTable& table) {
  double excess = 0;
  for (std::size_t i = table.count(); i-- > 1;)
    if (table.real[i]) excess += 1.0 / (static_cast<double>(table.degrees[i]) * table.degrees[i]);
  return std::sqrt(excess);
}

Rational zeta_excess_exact(const CharacterTable& table) {
  Rational z(0);
  for (std::size_t i = 1; i < table.count(); ++i) z += Rational(1, BigInt(table.degrees[i]) * table.degrees[i]);
  return z;
}

Rational real_excess_exact(const CharacterTable& table) {
  Rational z(0);
  for (std::size_t i = 1; i < table.count(); ++i)
    if (table.real[i]) z += Rational(1, BigInt(table.degrees[i]) * table.degrees[i]);
  return z;
}

ZetaTrendReport zeta_trend_report(Family family, const std::vector<std::uint32_t>& parameters, double s,
                                  const TableProvider& provider) {
  if (family != Family::alternating && family != Family::psl2)
    throw UnsupportedError("zeta trends are defined for the alternating and PSL2 families");
  ZetaTrendReport rep;
  rep.family = family;
  rep.s = s;
  if (family == Family::alternating) {
    rep.constant = 10;
    rep.asserted = true;
  } else {
    rep.constant = 3;
    rep.asserted = (s == 2.0);
  }
  for (std::uint32_t param : parameters) {
    GroupDescriptor d;
    d.family = family;
    d.parameter = param;
    const Group g(d);
    const CharacterTable table = provider ? provider(g) : character_table(g, conjugacy_classes(g));
    ZetaTrendRow row;
    row.parameter = param;
    row.group_order = g.order();
    double excess = 0;
    for (std::size_t i = table.count(); i-- > 1;) excess += std::pow(static_cast<double>(table.degrees[i]), -s);
    row.zeta_minus_one = excess;
    row.scaled = (family == Family::alternating ? std::pow(static_cast<double>(param), s) : static_cast<double>(param)) * excess;
    rep.rows.push_back(row);
  }
  rep.bounded = true;
  rep.decreasing = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    if (rep.rows[i].scaled > rep.constant) rep.bounded = false;
    if (i > 0 && !(rep.rows[i].zeta_minus_one < rep.rows[i - 1].zeta_minus_one)) rep.decreasing = false;
  }
  return rep;
}

}  // namespace cgw
