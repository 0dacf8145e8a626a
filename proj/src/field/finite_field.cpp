#include "cgw/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cgw/error.hpp"

namespace cgw {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * std::uint64_t{m[i]}) % p);
    }
    trim(a);
  }
  return a;
}

Poly from_code(std::uint32_t code, std::uint32_t p, std::uint32_t len) {
  Poly out(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power_decompose(std::uint32_t q, std::uint32_t& p, std::uint32_t& n) noexcept {
  if (q < 2) return false;
  std::uint32_t d = 2;
  while (q % d != 0) ++d;
  std::uint32_t rest = q;
  std::uint32_t k = 0;
  while (rest % d == 0) {
    rest /= d;
    ++k;
  }
  if (rest != 1) return false;
  p = d;
  n = k;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor = from_code(static_cast<std::uint32_t>(code), p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      // Normalize f to monic before dividing.
      Poly g = f;
      if (g.back() != 1) {
        std::uint32_t lead = g.back();
        std::uint32_t inv = 1;
        for (std::uint32_t t = 1; t < p; ++t) {
          if ((std::uint64_t{lead} * t) % p == 1) inv = t;
        }
        for (auto& c : g) c = static_cast<std::uint32_t>((std::uint64_t{c} * inv) % p);
      }
      if (poly_mod(g, divisor, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
  if (!is_prime(p)) throw UnsupportedError("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw UnsupportedError("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw CapExceededError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                             " exceeds 2^16");
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  digits_.resize(n_);
  std::uint32_t d = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    digits_[i] = d;
    d *= p_;
  }

  if (n_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t code = 0; code < q_; ++code) {
      Poly cand = from_code(code, p_, n_);
      cand.push_back(1);
      if (is_irreducible_mod_p(cand, p_)) {
        modulus_ = std::move(cand);
        break;
      }
    }
    if (modulus_.empty()) throw InternalError("no irreducible polynomial found");
  }

  // Log/antilog tables from the smallest-code primitive element.
  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  for (std::uint32_t code = 1; code < q_; ++code) {
    FieldElement g{code};
    FieldElement x = one();
    std::uint32_t order = 0;
    do {
      x = mul_slow(x, g);
      ++order;
    } while (x != one() && order < q_);
    if (order == q_ - 1) {
      x = one();
      for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = x.code;
        log_[x.code] = i;
        x = mul_slow(x, g);
      }
      break;
    }
  }
  if (q_ > 2 && exp_[1] == 0) throw InternalError("multiplicative group is not cyclic");
}

FieldElement Field::mul_slow(FieldElement a, FieldElement b) const {
  const Poly pa = from_code(a.code, p_, n_);
  const Poly pb = from_code(b.code, p_, n_);
  Poly prod(2 * n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
    }
  }
  Poly r = (n_ == 1) ? Poly{prod[0]} : poly_mod(prod, modulus_, p_);
  r.resize(n_, 0);
  std::uint32_t code = 0;
  for (std::uint32_t i = n_; i-- > 0;) code = code * p_ + r[i];
  return {code};
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("field element code out of range");
  return {code};
}

FieldElement Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > n_) throw std::invalid_argument("too many coefficients for field element");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient not reduced mod p");
    code = code * p_ + coeffs[i];
  }
  return {code};
}

FieldElement Field::from_integer(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const { return from_code(a.code, p_, n_); }

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (n_ == 1) return {(a.code + b.code) % p_};
  std::uint32_t x = a.code;
  std::uint32_t y = b.code;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((x % p_ + y % p_) % p_) * digits_[i];
    x /= p_;
    y /= p_;
  }
  return {out};
}

FieldElement Field::neg(FieldElement a) const {
  if (n_ == 1) return {(p_ - a.code) % p_};
  std::uint32_t x = a.code;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((p_ - x % p_) % p_) * digits_[i];
    x /= p_;
  }
  return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint32_t e = (log_[a.code] + log_[b.code]) % (q_ - 1);
  return {exp_[e]};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  const std::uint32_t e = (q_ - 1 - log_[a.code]) % (q_ - 1);
  return {exp_[e]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a.code]) * (e % (q_ - 1))) % (q_ - 1);
  return {exp_[l]};
}

FieldElement Field::apply(FieldOp op, FieldElement a, FieldElement b) const {
  switch (op) {
    case FieldOp::add:
      return add(a, b);
    case FieldOp::mul:
      return mul(a, b);
    case FieldOp::neg:
      return neg(a);
    case FieldOp::inv:
      return inv(a);
  }
  throw std::invalid_argument("unknown field operation");
}

std::uint32_t Field::multiplicative_order(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint32_t order = 1;
  FieldElement x = a;
  while (x != one()) {
    x = mul(x, a);
    ++order;
  }
  return order;
}

bool Field::is_square(FieldElement a) const {
  if (a.code == 0) return true;
  if (p_ == 2) return true;
  return log_[a.code] % 2 == 0;
}

std::string Field::to_string(FieldElement a) const {
  if (n_ == 1) return std::to_string(a.code);
  const Poly c = from_code(a.code, p_, n_);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = n_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace cgw
