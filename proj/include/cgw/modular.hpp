#pragma once

#include <cstdint>
#include <vector>

namespace cgw::modp {

using Row = std::vector<std::uint32_t>;
using Matrix = std::vector<Row>;

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);  // p prime, a != 0
std::uint32_t reduce(std::int64_t v, std::uint32_t p);

// Smallest primitive root modulo the prime p.
std::uint32_t primitive_root(std::uint32_t p);

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::uint32_t p);

// Basis of {v : m v = 0} for a square or rectangular matrix (columns = vector length).
Matrix nullspace(Matrix m, std::size_t columns, std::uint32_t p);

// Characteristic polynomial det(xI - m), coefficients constant term first.
Row charpoly(Matrix m, std::uint32_t p);

std::uint32_t eval_poly(const Row& poly, std::uint32_t x, std::uint32_t p);

}  // namespace cgw::modp
