// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

namespace gbgc::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Dense double-precision kernels used by the spectral code.
///
/// Every table computes the same functions. `rotate` is bitwise identical
/// across tables (no fused multiply-add anywhere); the reductions may differ
/// in the last few ulps because the summation order differs.
struct KernelTable {
  Isa isa;

  /// sum x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// sum x[i]^2
  double (*sum_squares)(const double* x, std::size_t n);
  /// sum (x[i] - y[i])^2
  double (*squared_distance)(const double* x, const double* y, std::size_t n);
  /// Plane rotation applied to a pair of rows:
  ///   x[i] <- c x[i] - s y[i],  y[i] <- s x[i] + c y[i]
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// Table selected once per process: the widest supported ISA, unless the
/// GBGC_SIMD environment variable is set to "scalar".
const KernelTable& active_kernels() noexcept;

}  // namespace gbgc::simd
