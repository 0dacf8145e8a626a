#include "cgw/modular.hpp"

#include <stdexcept>
#include <utility>

#include "cgw/kernels.hpp"

namespace cgw::modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  std::uint64_t b = a % p;
  while (e > 0) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
  return pow(a, p - 2, p);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t f : factors) {
      if (pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

std::vector<std::size_t> rref(Matrix& m, std::uint32_t p) {
  const auto& k = kernels::active();
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const std::uint32_t s = inv(m[row][c], p);
    for (auto& v : m[row]) v = mul(v, s, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      k.mod_axpy(m[r].data(), m[row].data(), p - m[r][c], p, cols);
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

Matrix nullspace(Matrix m, std::size_t columns, std::uint32_t p) {
  const auto pivots = rref(m, p);
  std::vector<char> is_pivot(columns, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    Row v(columns, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub(0, m[r][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

Row charpoly(Matrix h, std::uint32_t p) {
  const std::size_t n = h.size();
  const auto& k = kernels::active();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint32_t pinv = inv(h[j + 1][j], p);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const std::uint32_t u = mul(h[r][j], pinv, p);
      k.mod_axpy(h[r].data(), h[j + 1].data(), p - u, p, n);
      for (std::size_t t = 0; t < n; ++t) h[t][j + 1] = add(h[t][j + 1], mul(u, h[t][r], p), p);
    }
  }
  std::vector<Row> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Row next(m + 1, 0);
    const Row& prev = polys[m - 1];
    const std::uint32_t diag = h[m - 1][m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = add(next[d + 1], prev[d], p);
      next[d] = sub(next[d], mul(diag, prev[d], p), p);
    }
    std::uint32_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul(t, h[m - i][m - i - 1], p);
      const std::uint32_t coef = mul(t, h[m - i - 1][m - 1], p);
      const Row& q = polys[m - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] = sub(next[d], mul(coef, q[d], p), p);
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

std::uint32_t eval_poly(const Row& poly, std::uint32_t x, std::uint32_t p) {
  std::uint32_t r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = add(mul(r, x, p), poly[i], p);
  return r;
}

}  // namespace cgw::modp
