#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgw {

// An element of GF(p^n), encoded by its coefficient vector (c_0, ..., c_{n-1})
// over GF(p) as the integer sum c_i p^i. The encoding is the canonical form.
struct FieldElement {
  std::uint32_t code = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

enum class FieldOp { add, mul, neg, inv };

// GF(p^n) realized as GF(p)[x]/(f) with f the smallest monic irreducible of
// degree n, where candidates are ordered by the code of their non-leading
// coefficients (most significant digit = coefficient of x^(n-1)). For n = 1
// the modulus is x and the field is GF(p) itself. Immutable after construction.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  Field(std::uint32_t p, std::uint32_t n);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return q_; }

  // Modulus coefficients from constant term to the leading 1 (length n + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(std::uint32_t code) const;
  FieldElement from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  FieldElement from_integer(std::int64_t v) const;  // image of v under Z -> GF(p)
  std::vector<std::uint32_t> coefficients(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;  // throws std::domain_error on zero
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement frobenius(FieldElement a) const { return pow(a, p_); }

  FieldElement apply(FieldOp op, FieldElement a, FieldElement b = {}) const;

  // A generator of the multiplicative group (smallest code with order q - 1).
  FieldElement primitive_element() const noexcept { return {exp_.size() > 1 ? exp_[1] : 1u}; }
  std::uint32_t multiplicative_order(FieldElement a) const;
  bool is_square(FieldElement a) const;

  std::string to_string(FieldElement a) const;

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = code of g^i, length q - 1
  std::vector<std::uint32_t> log_;  // log_[code] for nonzero codes
  std::vector<std::uint32_t> digits_;  // p^i

  FieldElement mul_slow(FieldElement a, FieldElement b) const;
};

bool is_prime(std::uint64_t n) noexcept;

// Irreducibility over GF(p) by exhaustive trial division with every monic
// polynomial of degree 1..deg/2. Coefficients are given constant term first.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// Decomposes q = p^n; returns false when q is not a prime power.
bool prime_power_decompose(std::uint32_t q, std::uint32_t& p, std::uint32_t& n) noexcept;

}  // namespace cgw
