#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cgw/character.hpp"
#include "cgw/error.hpp"
#include "cgw/finite_field.hpp"
#include "cgw/modular.hpp"

namespace cgw {

namespace {

using modp::Matrix;
using modp::Row;

// Splits every invariant subspace into eigenspaces of the class matrices until
// all are one-dimensional. Subspaces are kept as reduced row echelon bases.
std::vector<Row> common_eigenvectors(const ClassAlgebra& alg, std::uint32_t p) {
  const std::size_t k = alg.k;
  Matrix start(k, Row(k, 0));
  for (std::size_t i = 0; i < k; ++i) start[i][i] = 1;
  std::vector<Matrix> spaces{start};

  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Matrix& s) { return s.size() == 1; })) break;
    std::vector<Matrix> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::vector<std::size_t> pivots(d);
      for (std::size_t r = 0; r < d; ++r)
        pivots[r] = static_cast<std::size_t>(std::find_if(basis[r].begin(), basis[r].end(), [](auto v) { return v != 0; }) - basis[r].begin());
      // Coordinates of M_j b_c in the basis: read off at the pivot columns.
      Matrix restricted(d, Row(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < d; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t t = 0; t < k; ++t) {
            if (basis[c][t] == 0) continue;
            acc = (acc + (alg.at(pivots[r], j, t) % p) * basis[c][t]) % p;
          }
          restricted[r][c] = static_cast<std::uint32_t>(acc);
        }
      }
      const Row poly = modp::charpoly(restricted, p);
      std::size_t found = 0;
      for (std::uint32_t lambda = 0; lambda < p && found < d; ++lambda) {
        if (modp::eval_poly(poly, lambda, p) != 0) continue;
        Matrix shifted = restricted;
        for (std::size_t r = 0; r < d; ++r) shifted[r][r] = modp::sub(shifted[r][r], lambda, p);
        const Matrix coords = modp::nullspace(shifted, d, p);
        Matrix eigen;
        for (const Row& c : coords) {
          Row v(k, 0);
          for (std::size_t r = 0; r < d; ++r) {
            if (c[r] == 0) continue;
            for (std::size_t t = 0; t < k; ++t) v[t] = modp::add(v[t], modp::mul(c[r], basis[r][t], p), p);
          }
          eigen.push_back(std::move(v));
        }
        modp::rref(eigen, p);
        found += eigen.size();
        next.push_back(std::move(eigen));
      }
      if (found != d) throw InternalError("class matrix is not diagonalizable modulo " + std::to_string(p));
    }
    spaces = std::move(next);
  }

  std::vector<Row> vectors;
  for (auto& s : spaces) {
    if (s.size() != 1) throw InternalError("class matrices do not separate the characters");
    vectors.push_back(std::move(s[0]));
  }
  return vectors;
}

std::uint32_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::uint32_t dixon_prime(std::uint32_t exponent, std::uint64_t group_order) {
  for (std::uint64_t p = std::uint64_t{exponent} + 1; p < (1ull << 31); p += exponent) {
    if (p * p <= 4 * group_order) continue;
    if (is_prime(p)) return static_cast<std::uint32_t>(p);
  }
  throw CapExceededError("no prime congruent to 1 modulo exponent " + std::to_string(exponent) + " below 2^31");
}

Cyclotomic CharacterTable::exact(std::size_t chi, std::size_t t) const {
  const auto& m = mult[chi][t];
  return Cyclotomic::from_powers(class_orders[t], std::vector<std::int64_t>(m.begin(), m.end()));
}

std::vector<std::int64_t> CharacterTable::exponent_coefficients(std::size_t chi, std::size_t t) const {
  std::vector<std::int64_t> c(exponent, 0);
  const std::uint32_t stride = exponent / class_orders[t];
  const auto& m = mult[chi][t];
  for (std::size_t j = 0; j < m.size(); ++j) c[j * stride] = m[j];
  return c;
}

std::complex<double> CharacterTable::evaluate(std::size_t chi, std::size_t t) const {
  const auto& m = mult[chi][t];
  const double o = class_orders[t];
  std::complex<double> z = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    z += static_cast<double>(m[j]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / o);
  }
  return z;
}

void refresh_float_mirror(CharacterTable& table) {
  const std::size_t h = table.count(), k = table.class_count();
  table.values.assign(h, std::vector<std::complex<double>>(k));
  table.real.assign(h, true);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      table.values[i][t] = table.evaluate(i, t);
      const auto& m = table.mult[i][t];
      const std::size_t o = m.size();
      for (std::size_t j = 1; j < o; ++j)
        if (m[j] != m[o - j]) table.real[i] = false;
    }
    bool float_real = true;
    for (std::size_t t = 0; t < k; ++t)
      if (std::abs(table.values[i][t].imag()) > 1e-9) float_real = false;
    if (float_real != table.real[i]) throw InternalError("reality flag disagrees with the float mirror");
  }
}

CharacterTable character_table(const Group& group, const ClassData& classes) {
  return character_table(group, classes, class_algebra(group, classes));
}

CharacterTable character_table(const Group& group, const ClassData& classes, const ClassAlgebra& algebra) {
  const std::size_t k = classes.count();
  if (k > kMaxCharacterClasses)
    throw CapExceededError(group.name() + " has " + std::to_string(k) + " classes; character tables are capped at " +
                           std::to_string(kMaxCharacterClasses));
  const std::uint64_t order = group.order();
  CharacterTable tab;
  tab.group_order = order;
  tab.exponent = classes.exponent;
  tab.prime = dixon_prime(classes.exponent, order);
  const std::uint32_t p = tab.prime;
  tab.root = modp::pow(modp::primitive_root(p), (p - 1) / tab.exponent, p);
  for (const auto& c : classes.classes) {
    tab.class_sizes.push_back(c.size);
    tab.class_orders.push_back(c.element_order);
  }
  tab.inverse_class = classes.inverse_class;

  const auto vectors = common_eigenvectors(algebra, p);
  if (vectors.size() != k) throw InternalError("wrong number of irreducible characters");

  struct Raw {
    std::uint32_t degree;
    std::vector<std::vector<std::uint32_t>> mult;
    bool trivial;
  };
  std::vector<Raw> raws;
  const std::uint32_t max_degree = isqrt(order);
  for (Row w : vectors) {
    const std::uint32_t s0 = modp::inv(w[0], p);
    for (auto& v : w) v = modp::mul(v, s0, p);
    // |G| / chi(1)^2 = sum_t w_t w_t* / |C_t|
    std::uint32_t acc = 0;
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint32_t size_inv = modp::inv(static_cast<std::uint32_t>(tab.class_sizes[t] % p), p);
      acc = modp::add(acc, modp::mul(modp::mul(w[t], w[tab.inverse_class[t]], p), size_inv, p), p);
    }
    const std::uint32_t d2 = modp::mul(static_cast<std::uint32_t>(order % p), modp::inv(acc, p), p);
    std::uint32_t degree = 0;
    for (std::uint32_t d = 1; d <= max_degree; ++d) {
      if (order % d == 0 && modp::mul(d, d, p) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw InternalError("no admissible degree for a central character");

    std::vector<std::uint32_t> value(k);  // character values mod p
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint32_t size_inv = modp::inv(static_cast<std::uint32_t>(tab.class_sizes[t] % p), p);
      value[t] = modp::mul(modp::mul(w[t], degree, p), size_inv, p);
    }

    Raw raw{degree, {}, true};
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint32_t o = tab.class_orders[t];
      const std::uint32_t zo = modp::pow(tab.root, tab.exponent / o, p);
      const std::uint32_t zo_inv = modp::inv(zo, p);
      const std::uint32_t o_inv = modp::inv(o % p, p);
      std::vector<std::uint32_t> m(o);
      std::uint64_t total = 0;
      for (std::uint32_t j = 0; j < o; ++j) {
        std::uint32_t acc2 = 0;
        const std::uint32_t step = modp::pow(zo_inv, j, p);
        std::uint32_t twist = 1;
        for (std::uint32_t s = 0; s < o; ++s) {
          acc2 = modp::add(acc2, modp::mul(value[classes.power_class[t][s]], twist, p), p);
          twist = modp::mul(twist, step, p);
        }
        m[j] = modp::mul(acc2, o_inv, p);
        if (m[j] > degree) throw InternalError("eigenvalue multiplicity exceeds the degree");
        total += m[j];
      }
      if (total != degree) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      if (m[0] != degree) raw.trivial = false;
      raw.mult.push_back(std::move(m));
    }
    raws.push_back(std::move(raw));
  }

  std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
    if (a.trivial != b.trivial) return a.trivial;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.mult < b.mult;
  });
  std::uint64_t sum_sq = 0;
  for (auto& r : raws) {
    sum_sq += std::uint64_t{r.degree} * r.degree;
    tab.degrees.push_back(r.degree);
    tab.mult.push_back(std::move(r.mult));
  }
  if (sum_sq != order) throw InternalError("degrees squared do not sum to the group order");
  refresh_float_mirror(tab);
  return tab;
}

std::vector<std::size_t> real_characters(const CharacterTable& table) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.count(); ++i)
    if (table.real[i]) out.push_back(i);
  return out;
}

}  // namespace cgw
