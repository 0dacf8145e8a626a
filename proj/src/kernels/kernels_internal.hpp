#pragma once

#include "cgw/kernels.hpp"

namespace cgw::kernels::detail {

void compose_then_scalar(const Perm16* xs, const Perm16& z, Perm16* out, std::size_t n);
void mod_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                     std::uint32_t prime, std::size_t n);
double weighted_abs_dev_scalar(const double* value, const double* weight, double center,
                               std::size_t n);
double dot_scalar(const double* a, const double* b, std::size_t n);

#if defined(CGW_HAVE_AVX2)
void compose_then_avx2(const Perm16* xs, const Perm16& z, Perm16* out, std::size_t n);
void mod_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                   std::uint32_t prime, std::size_t n);
double weighted_abs_dev_avx2(const double* value, const double* weight, double center,
                             std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
#endif

}  // namespace cgw::kernels::detail
