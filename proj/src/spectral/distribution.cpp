#include <cmath>
#include <string>

#include "cgw/error.hpp"
#include "cgw/kernels.hpp"
#include "cgw/spectral.hpp"

namespace cgw {

namespace {

void fill_float(Distribution& d) {
  d.mass_float.clear();
  for (const auto& m : d.mass) d.mass_float.push_back(to_double(m));
}

void require_same_shape(const Distribution& p, const Distribution& q) {
  if (p.group_order != q.group_order || p.class_sizes != q.class_sizes)
    throw std::invalid_argument("distributions live on different groups");
}

}  // namespace

Distribution Distribution::from_masses(std::uint64_t group_order, const std::vector<std::uint64_t>& class_sizes,
                                       std::vector<Rational> mass) {
  if (mass.size() != class_sizes.size()) throw std::invalid_argument("one mass per class is required");
  Distribution d;
  d.group_order = group_order;
  d.class_sizes = class_sizes;
  d.mass = std::move(mass);
  for (const auto& m : d.mass)
    if (m < 0) throw std::invalid_argument("negative probability mass");
  fill_float(d);
  return d;
}

Distribution Distribution::from_fibers(const FiberTable& f) {
  std::vector<Rational> mass;
  for (std::size_t t = 0; t < f.class_count(); ++t)
    mass.emplace_back(BigInt(f.class_totals[t]), BigInt(f.class_sizes[t]) * f.total);
  Distribution d = from_masses(f.group_order, f.class_sizes, std::move(mass));
  d.arity = f.arity;
  return d;
}

Distribution Distribution::uniform(std::uint64_t group_order, const std::vector<std::uint64_t>& class_sizes) {
  return from_masses(group_order, class_sizes, std::vector<Rational>(class_sizes.size(), Rational(1, group_order)));
}

Distribution Distribution::identity_mass(std::uint64_t group_order, const std::vector<std::uint64_t>& class_sizes) {
  std::vector<Rational> mass(class_sizes.size(), Rational(0));
  mass.at(0) = 1;
  return from_masses(group_order, class_sizes, std::move(mass));
}

Rational Distribution::total_mass() const {
  Rational s = 0;
  for (std::size_t t = 0; t < mass.size(); ++t) s += mass[t] * class_sizes[t];
  return s;
}

FourierReport fourier_coefficients(const Distribution& dist, const CharacterTable& table) {
  if (dist.class_sizes != table.class_sizes) throw std::invalid_argument("distribution and table classes differ");
  FourierReport r;
  const std::size_t k = table.class_count();
  for (std::size_t chi = 0; chi < table.count(); ++chi) {
    std::complex<double> a = 0.0;
    for (std::size_t t = 0; t < k; ++t)
      a += static_cast<double>(dist.class_sizes[t]) * dist.mass_float[t] * std::conj(table.values[chi][t]);
    r.coefficients.push_back(a);
  }
  for (std::size_t t = 0; t < k; ++t) r.sum_of_squares += static_cast<double>(dist.class_sizes[t]) * dist.mass_float[t] * dist.mass_float[t];
  for (const auto& a : r.coefficients) r.plancherel += std::norm(a);
  r.plancherel /= static_cast<double>(table.group_order);
  if (std::abs(r.coefficients.at(0) - 1.0) > 1e-9) throw VerificationError("Fourier coefficient of the trivial character is not 1");
  if (std::abs(r.sum_of_squares - r.plancherel) > 1e-8) throw VerificationError("Plancherel identity fails");
  return r;
}

Rational l1_distance(const Distribution& p, const Distribution& q) {
  require_same_shape(p, q);
  Rational s = 0;
  for (std::size_t t = 0; t < p.mass.size(); ++t) s += abs(p.mass[t] - q.mass[t]) * p.class_sizes[t];
  return s;
}

double l1_to_uniform(const Distribution& p) {
  std::vector<double> weights(p.class_sizes.begin(), p.class_sizes.end());
  return kernels::active().weighted_abs_dev(p.mass_float.data(), weights.data(),
                                            1.0 / static_cast<double>(p.group_order), weights.size());
}

Rational l1_to_uniform_exact(const FiberTable& fibers) {
  const Distribution p = Distribution::from_fibers(fibers);
  return l1_distance(p, Distribution::uniform(p.group_order, p.class_sizes));
}

L1BoundCheck commutator_l1_check(const CharacterTable& table) {
  L1BoundCheck c;
  c.word = "[x1,x2]";
  c.l1 = l1_to_uniform_exact(frobenius_fibers(table));
  c.bound_squared = zeta_excess_exact(table);
  c.bound = std::sqrt(to_double(c.bound_squared));
  return c;
}

L1BoundCheck squares_l1_check(const CharacterTable& table) {
  L1BoundCheck c;
  c.word = "x1^2x2^2";
  c.l1 = l1_to_uniform_exact(squares_word_fibers(table));
  c.bound_squared = real_excess_exact(table);
  c.bound = std::sqrt(to_double(c.bound_squared));
  return c;
}

std::vector<DeviationRow> deviation_report(const FiberTable& fibers, const CharacterTable& table) {
  std::vector<DeviationRow> rows;
  for (std::size_t t = 0; t < fibers.class_count(); ++t) {
    DeviationRow r;
    r.delta = fibers.normalized(t) - 1;
    for (std::size_t chi = 1; chi < table.count(); ++chi) r.bound += std::abs(table.values[chi][t]) / table.degrees[chi];
    r.within = std::abs(to_double(r.delta)) <= r.bound + 1e-9;
    rows.push_back(std::move(r));
  }
  return rows;
}

EquidistributionWitness equidistribution_witness(const FiberTable& fibers, const Rational& epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("witness tolerance must be positive");
  EquidistributionWitness w;
  w.epsilon = epsilon;
  w.fibers_within = true;
  bool first = true;
  for (std::size_t t = 0; t < fibers.class_count(); ++t) {
    const Rational ratio = fibers.normalized(t);
    if (abs(ratio - 1) > epsilon) continue;
    w.classes.push_back(static_cast<std::uint32_t>(t));
    w.size += fibers.class_sizes[t];
    if (first || ratio < w.min_ratio) w.min_ratio = ratio;
    if (first || ratio > w.max_ratio) w.max_ratio = ratio;
    first = false;
  }
  if (!first) w.fibers_within = w.min_ratio >= 1 - epsilon && w.max_ratio <= 1 + epsilon;
  w.large_enough = Rational(w.size) >= (1 - epsilon) * fibers.group_order;
  return w;
}

EquidistributionWitness equidistribution_witness(const FiberTable& fibers, double epsilon) {
  return equidistribution_witness(fibers, exact_rational(epsilon));
}

EquidistributionWitness equidistribution_witness_sqrt(const FiberTable& fibers, const Rational& d) {
  if (!(d > 0)) throw std::invalid_argument("witness tolerance must be positive");
  EquidistributionWitness w;
  w.epsilon = exact_rational(sqrt_upper(d));
  bool first = true;
  for (std::size_t t = 0; t < fibers.class_count(); ++t) {
    const Rational dev = fibers.normalized(t) - 1;
    if (dev * dev > d) continue;
    w.classes.push_back(static_cast<std::uint32_t>(t));
    w.size += fibers.class_sizes[t];
    const Rational ratio = dev + 1;
    if (first || ratio < w.min_ratio) w.min_ratio = ratio;
    if (first || ratio > w.max_ratio) w.max_ratio = ratio;
    first = false;
  }
  w.fibers_within = true;  // by construction every kept class satisfies dev^2 <= d
  // |G| - size <= sqrt(d) |G|
  const Rational missing(BigInt(fibers.group_order - w.size), BigInt(fibers.group_order));
  w.large_enough = missing * missing <= d;
  return w;
}

MeasureCheck measure_preservation_check(const FiberTable& fibers, const std::vector<std::uint64_t>& per_class,
                                        const Rational& epsilon) {
  if (per_class.size() != fibers.class_count()) throw std::invalid_argument("one subset count per class is required");
  MeasureCheck m;
  Rational pre = 0;
  std::uint64_t elements = 0;
  for (std::size_t t = 0; t < per_class.size(); ++t) {
    if (per_class[t] > fibers.class_sizes[t]) throw std::invalid_argument("subset count exceeds the class size");
    pre += Rational(BigInt(fibers.class_totals[t]) * per_class[t], BigInt(fibers.class_sizes[t]));
    elements += per_class[t];
  }
  m.preimage_mass = pre / fibers.total;
  m.target_mass = Rational(elements, fibers.group_order);
  m.slack = 3 * epsilon;
  m.verdict = abs(m.preimage_mass - m.target_mass) <= m.slack;
  return m;
}

MeasureCheck measure_preservation_check(const FiberTable& fibers, const ClassData& classes,
                                        const std::vector<Elem>& subset, const Rational& epsilon) {
  std::vector<std::uint64_t> per_class(classes.count(), 0);
  std::vector<bool> seen(classes.group_order, false);
  for (Elem g : subset) {
    if (seen.at(g)) continue;
    seen[g] = true;
    ++per_class[classes.class_of[g]];
  }
  return measure_preservation_check(fibers, per_class, epsilon);
}

CommutatorCount commutator_count_check(const FiberTable& fibers, double delta) {
  CommutatorCount c;
  for (std::size_t t = 0; t < fibers.class_count(); ++t)
    if (fibers.class_totals[t] > 0) c.count += fibers.class_sizes[t];
  c.bound = (1.0 - delta) * static_cast<double>(fibers.group_order);
  c.vacuous = delta >= 1.0;
  c.verdict = static_cast<double>(c.count) >= c.bound;
  return c;
}

}  // namespace cgw
