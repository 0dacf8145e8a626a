#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cgw {

// The n-th cyclotomic polynomial, coefficients from the constant term up.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

// An element of Z[zeta_n] stored in the power basis 1, zeta, ..., zeta^(phi(n)-1)
// after reduction modulo the n-th cyclotomic polynomial, so equal elements
// have equal coefficient vectors.
class Cyclotomic {
 public:
  explicit Cyclotomic(std::uint32_t n = 1);

  // sum_j coeffs[j] zeta_n^j; coeffs may have any length (indices taken mod n).
  static Cyclotomic from_powers(std::uint32_t n, const std::vector<std::int64_t>& coeffs);

  std::uint32_t conductor() const noexcept { return n_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

  bool is_integer() const noexcept;
  std::int64_t integer_value() const;  // throws VerificationError unless is_integer()
  std::complex<double> to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator*=(std::int64_t s);
  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

 private:
  std::uint32_t n_;
  std::vector<std::int64_t> c_;
};

}  // namespace cgw
