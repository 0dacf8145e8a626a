#include "kernels_internal.hpp"

#include <cstdlib>

namespace cgw::kernels {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{Isa::scalar, detail::compose_then_scalar,
                                 detail::mod_axpy_scalar, detail::weighted_abs_dev_scalar,
                                 detail::dot_scalar};
  return table;
}

const KernelTable* avx2_kernels() noexcept {
#if defined(CGW_HAVE_AVX2)
  static const KernelTable table{Isa::avx2, detail::compose_then_avx2, detail::mod_axpy_avx2,
                                 detail::weighted_abs_dev_avx2, detail::dot_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = []() -> const KernelTable& {
    if (std::getenv("CGW_FORCE_SCALAR") == nullptr) {
      if (const KernelTable* t = avx2_kernels()) return *t;
    }
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace cgw::kernels
