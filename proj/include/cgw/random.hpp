#pragma once

#include <cstdint>
#include <random>

namespace cgw {

// Uniform draw from [0, bound) with Lemire's multiply-and-reject method. Unlike
// std::uniform_int_distribution its output is fixed by the engine state alone,
// so seeded runs are reproducible across standard libraries.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace cgw
