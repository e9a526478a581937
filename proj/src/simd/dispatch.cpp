// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string_view>

#include "gbgc/simd/kernels.hpp"
#include "kernels_impl.hpp"

namespace gbgc::simd {

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
  static const KernelTable table{Isa::scalar, scalar::dot, scalar::sum_squares,
                                 scalar::squared_distance, scalar::rotate};
  return table;
}

const KernelTable* avx2_kernels() noexcept {
#if defined(GBGC_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  static const KernelTable table{Isa::avx2, avx2::dot, avx2::sum_squares,
                                 avx2::squared_distance, avx2::rotate};
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable* selected = [] {
    const char* env = std::getenv("GBGC_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const KernelTable* wide = avx2_kernels()) return wide;
    return &scalar_kernels();
  }();
  return *selected;
}

}  // namespace gbgc::simd
