#include "cgw/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "cgw/error.hpp"

namespace cgw {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapExceededError("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapExceededError("cyclotomic coefficient overflow");
  return r;
}

// Exact division of a by the monic polynomial b.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of index 0");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(std::uint32_t n) : n_(n), c_(euler_phi(n), 0) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
}

Cyclotomic Cyclotomic::from_powers(std::uint32_t n, const std::vector<std::int64_t>& coeffs) {
  Cyclotomic r(n);
  std::vector<std::int64_t> full(n, 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) full[j % n] = checked_add(full[j % n], coeffs[j]);
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = n; i-- > d;) {
    const std::int64_t c = full[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) full[i - d + j] = checked_add(full[i - d + j], -checked_mul(c, phi[j]));
  }
  for (std::size_t i = 0; i < d; ++i) r.c_[i] = full[i];
  return r;
}

bool Cyclotomic::is_integer() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::int64_t Cyclotomic::integer_value() const {
  if (!is_integer()) throw VerificationError("cyclotomic value is not a rational integer");
  return c_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0.0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / n_;
    z += static_cast<double>(c_[j]) * std::polar(1.0, angle);
  }
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) throw std::invalid_argument("cyclotomic conductors differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t s) {
  for (auto& v : c_) v = checked_mul(v, s);
  return *this;
}

}  // namespace cgw
