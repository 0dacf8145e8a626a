#pragma once

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2 variant chosen once at runtime. Every variant must produce results
// identical to the scalar kernels (bit-identical for the integer kernels).

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cgw::kernels {

// A permutation of at most 16 points, padded with fixed points so that the
// byte shuffle instructions can compose two of them directly.
struct alignas(16) Perm16 {
  std::array<std::uint8_t, 16> img;

  static Perm16 identity() noexcept {
    Perm16 p{};
    for (std::uint8_t i = 0; i < 16; ++i) p.img[i] = i;
    return p;
  }
  friend bool operator==(const Perm16&, const Perm16&) = default;
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  // out[i] = xs[i] followed by z, i.e. out[i].img[p] = z.img[xs[i].img[p]].
  void (*compose_then)(const Perm16* xs, const Perm16& z, Perm16* out, std::size_t n);

  // dst[i] = (dst[i] + factor * src[i]) mod prime, all operands reduced mod prime.
  void (*mod_axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                   std::uint32_t prime, std::size_t n);

  // sum_i weight[i] * |value[i] - center|
  double (*weighted_abs_dev)(const double* value, const double* weight, double center,
                             std::size_t n);

  double (*dot)(const double* a, const double* b, std::size_t n);
};

// The AVX2 mod_axpy evaluates products in double precision and is only
// dispatched for primes below this bound; larger primes use the scalar kernel.
inline constexpr std::uint32_t kSimdPrimeBound = 1u << 26;

const KernelTable& scalar_kernels() noexcept;

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels() noexcept;

// Best table for this machine; resolved on first use. Setting the environment
// variable CGW_FORCE_SCALAR selects the scalar table.
const KernelTable& active() noexcept;

}  // namespace cgw::kernels
