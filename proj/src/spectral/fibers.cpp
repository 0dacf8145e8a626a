#include <cmath>
#include <string>

#include "cgw/error.hpp"
#include "cgw/spectral.hpp"

namespace cgw {

namespace {

FiberTable character_sum_fibers(const CharacterTable& table, bool real_only, const char* word) {
  FiberTable f;
  f.word = word;
  f.arity = 2;
  f.group_order = table.group_order;
  f.class_sizes = table.class_sizes;
  f.total = table.group_order * table.group_order;
  const std::size_t k = table.class_count();
  for (std::size_t t = 0; t < k; ++t) {
    const std::uint32_t o = table.class_orders[t];
    std::vector<std::int64_t> coeffs(o, 0);
    double approx = 0;
    for (std::size_t chi = 0; chi < table.count(); ++chi) {
      if (real_only && !table.real[chi]) continue;
      const auto scale = static_cast<std::int64_t>(table.group_order / table.degrees[chi]);
      for (std::uint32_t j = 0; j < o; ++j) coeffs[j] += scale * table.mult[chi][t][j];
      approx += static_cast<double>(scale) * table.values[chi][t].real();
    }
    const Cyclotomic exact = Cyclotomic::from_powers(o, coeffs);
    if (!exact.is_integer())
      throw VerificationError(std::string(word) + " fiber at class " + std::to_string(t) + " is not an integer");
    const std::int64_t n = exact.integer_value();
    if (n < 0) throw VerificationError(std::string(word) + " fiber at class " + std::to_string(t) + " is negative");
    if (std::abs(approx - static_cast<double>(n)) > 1e-6)
      throw VerificationError(std::string(word) + " fiber at class " + std::to_string(t) +
                              " disagrees with its floating-point evaluation");
    f.counts.push_back(static_cast<std::uint64_t>(n));
    f.class_totals.push_back(static_cast<std::uint64_t>(n) * table.class_sizes[t]);
  }
  f.verify_conservation();
  return f;
}

}  // namespace

void FiberTable::verify_conservation() const {
  BigInt sum = 0;
  for (auto v : class_totals) sum += v;
  if (sum != total)
    throw VerificationError(word + ": fiber sizes sum to " + sum.str() + ", expected " + std::to_string(total));
  if (!sampled) {
    BigInt expect = 1;
    for (std::uint32_t i = 0; i < arity; ++i) expect *= group_order;
    if (expect != total) throw VerificationError(word + ": total differs from |G|^arity");
  }
}

Rational FiberTable::normalized(std::size_t t) const {
  return Rational(BigInt(class_totals[t]) * group_order, BigInt(class_sizes[t]) * total);
}

FiberTable frobenius_fibers(const CharacterTable& table) { return character_sum_fibers(table, false, "[x1,x2]"); }

FiberTable squares_word_fibers(const CharacterTable& table) { return character_sum_fibers(table, true, "x1^2x2^2"); }

}  // namespace cgw
