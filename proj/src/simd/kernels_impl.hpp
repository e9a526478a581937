// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

// Per-ISA entry points. Each namespace lives in its own translation unit so
// the AVX2 one can be compiled with -mavx2 without leaking into the rest.

#pragma once

#include <cstddef>

namespace gbgc::simd::scalar {
double dot(const double* x, const double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
double squared_distance(const double* x, const double* y, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
}  // namespace gbgc::simd::scalar

#if defined(GBGC_HAVE_AVX2)
namespace gbgc::simd::avx2 {
double dot(const double* x, const double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
double squared_distance(const double* x, const double* y, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
}  // namespace gbgc::simd::avx2
#endif
