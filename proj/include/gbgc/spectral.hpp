// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gbgc/coarse.hpp"
#include "gbgc/engine.hpp"
#include "gbgc/graph.hpp"

namespace gbgc {

/// Dense symmetric matrix, row-major. Construction rejects inputs whose
/// asymmetry exceeds 1e-12 relative to the largest entry.
class SymMatrix {
 public:
  SymMatrix() = default;
  SymMatrix(std::size_t order, std::vector<double> entries);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * order_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept { return {entries_.data() + i * order_, order_}; }
  const std::vector<double>& entries() const noexcept { return entries_; }

 private:
  std::size_t order_ = 0;
  std::vector<double> entries_;
};

enum class LaplacianKind { combinatorial, normalized };
enum class SdMode { projected, unweighted };

/// D - A, or D^-1/2 (D - A) D^-1/2 with isolated nodes giving zero rows.
SymMatrix laplacian(const Graph& g, LaplacianKind kind);

/// Symmetric normalization of an arbitrary Laplacian-like matrix using its
/// own diagonal as the degree vector. Rows with a zero diagonal stay zero.
SymMatrix normalize_laplacian(const SymMatrix& m);

struct Spectrum {
  /// Ascending.
  std::vector<double> eigenvalues;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Row i is the unit eigenvector for spectrum.eigenvalues[i]; empty when
  /// vectors were not requested.
  std::vector<std::vector<double>> vectors;
};

inline constexpr double kDefaultEigenTolerance = 1e-10;

/// Cyclic Jacobi. Iterates until the Frobenius norm of the off-diagonal part
/// falls below `tol`; throws ConvergenceError if that never happens.
EigenDecomposition eigen_symmetric(const SymMatrix& m, double tol = kDefaultEigenTolerance,
                                   bool want_vectors = false);

Spectrum eigenvalues_symmetric(const SymMatrix& m, double tol = kDefaultEigenTolerance);

/// Euclidean distance between spectra after prepending zeros to the shorter
/// one.
double spectral_distance(const Spectrum& a, const Spectrum& b);

struct RayleighPair {
  double original = 0.0;   // xᵀLx / xᵀx
  double coarsened = 0.0;  // (Cᵀx)ᵀ L̄ (Cᵀx) / (Cᵀx)ᵀ(Cᵀx)
};

/// Throws DegenerateInputError when x or Cᵀx is the zero vector and
/// ValidationError on dimension mismatches.
RayleighPair rayleigh_pair(const SymMatrix& lap, const SymMatrix& projected, const ProjectionMap& c,
                           std::span<const double> x);

struct RayleighSample {
  double original;
  double coarsened;
  /// |R_c - R_o| / max(|R_o|, |R_c|); 0 when both are below 1e-12.
  double relative_gap;
};

struct EvaluateConfig {
  LaplacianKind laplacian_kind = LaplacianKind::combinatorial;
  SdMode sd_mode = SdMode::projected;
  bool rayleigh = true;
  std::size_t rayleigh_samples = 16;
};

struct SpectralReport {
  double sd = 0.0;
  double r_a = 0.0;
  std::vector<RayleighSample> rayleigh_samples;
  LaplacianKind laplacian_kind = LaplacianKind::combinatorial;
  SdMode sd_mode = SdMode::projected;
};

/// The deterministic Rayleigh probe vectors: eigenvectors of L̄ lifted
/// through C (lowest eigenvalues first, at most half the budget), then
/// indicator vectors of the largest balls.
std::vector<std::vector<double>> rayleigh_probe_vectors(const CoarsenedGraph& cg, const ProjectionMap& c,
                                                        std::size_t budget);

SpectralReport evaluate(const Graph& g, const CoarsenedGraph& cg, const Partition& p,
                        const EvaluateConfig& cfg = {});

}  // namespace gbgc
