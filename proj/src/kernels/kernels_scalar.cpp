#include "kernels_internal.hpp"

#include <cmath>

namespace cgw::kernels::detail {

void compose_then_scalar(const Perm16* xs, const Perm16& z, Perm16* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    Perm16 r;
    for (int p = 0; p < 16; ++p) r.img[p] = z.img[xs[i].img[p] & 15];
    out[i] = r;
  }
}

void mod_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                     std::uint32_t prime, std::size_t n) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % prime);
  }
}

double weighted_abs_dev_scalar(const double* value, const double* weight, double center,
                               std::size_t n) {
  // Four partial sums in the same lane order as the AVX2 kernel so both
  // variants round identically.
  double acc[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) acc[l] += weight[i + l] * std::fabs(value[i + l] - center);
  }
  double total = (acc[0] + acc[2]) + (acc[1] + acc[3]);
  for (; i < n; ++i) total += weight[i] * std::fabs(value[i] - center);
  return total;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) acc[l] += a[i + l] * b[i + l];
  }
  double total = (acc[0] + acc[2]) + (acc[1] + acc[3]);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

}  // namespace cgw::kernels::detail
