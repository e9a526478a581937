// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gbgc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gbgc/error.hpp"
#include "gbgc/simd/kernels.hpp"

namespace gbgc {

SymMatrix::SymMatrix(std::size_t order, std::vector<double> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw ValidationError("matrix of order " + std::to_string(order_) + " needs " +
                          std::to_string(order_ * order_) + " entries");
  }
  double scale = 0.0;
  for (double v : entries_) scale = std::max(scale, std::abs(v));
  const double limit = 1e-12 * std::max(scale, 1.0);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if (!(std::abs(entries_[i * order_ + j] - entries_[j * order_ + i]) <= limit)) {
        throw ValidationError("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

SymMatrix laplacian(const Graph& g, LaplacianKind kind) {
  const std::size_t n = g.node_count();
  std::vector<double> m(n * n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    m[u * n + u] = g.degree(u);
    for (NodeId v : g.neighbors(u)) m[u * n + v] = -1.0;
  }
  SymMatrix lap(n, std::move(m));
  return kind == LaplacianKind::normalized ? normalize_laplacian(lap) : lap;
}

SymMatrix normalize_laplacian(const SymMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double di = m(i, i);
    if (!(di > 0.0)) continue;
    out[i * n + i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double dj = m(j, j);
      if (j != i && dj > 0.0) out[i * n + j] = m(i, j) / std::sqrt(di * dj);
    }
  }
  return SymMatrix(n, std::move(out));
}

EigenDecomposition eigen_symmetric(const SymMatrix& m, double tol, bool want_vectors) {
  if (!(tol > 0.0)) throw ValidationError("eigen tolerance must be positive");
  const auto& k = simd::active_kernels();
  const std::size_t n = m.order();
  std::vector<double> a = m.entries();
  std::vector<double> vt;
  if (want_vectors) {
    vt.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;
  }

  auto off_diagonal_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) s += k.sum_squares(&a[p * n + p + 1], n - p - 1);
    return std::sqrt(2.0 * s);
  };

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm() < tol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Once the sweep count is past the early phase, entries below the
        // diagonals' rounding level are flushed instead of rotated.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        k.rotate(&a[p * n], &a[q * n], n, c, s);
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        // Column q is mirrored now; column p is only read through row p
        // until the q loop ends, so it is mirrored once afterwards.
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) a[r * n + q] = a[q * n + r];
        }
        if (want_vectors) k.rotate(&vt[p * n], &vt[q * n], n, c, s);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r != p) a[r * n + p] = a[p * n + r];
      }
    }
  }
  if (!converged && off_diagonal_norm() >= tol) {
    throw ConvergenceError("Jacobi iteration did not reach tolerance " + std::to_string(tol) + " on order " +
                           std::to_string(n));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });
  EigenDecomposition out;
  out.spectrum.eigenvalues.reserve(n);
  for (std::size_t i : order) out.spectrum.eigenvalues.push_back(a[i * n + i]);
  if (want_vectors) {
    out.vectors.reserve(n);
    for (std::size_t i : order) out.vectors.emplace_back(vt.begin() + i * n, vt.begin() + (i + 1) * n);
  }
  return out;
}

Spectrum eigenvalues_symmetric(const SymMatrix& m, double tol) {
  return eigen_symmetric(m, tol, false).spectrum;
}

double spectral_distance(const Spectrum& a, const Spectrum& b) {
  const auto& longer = a.eigenvalues.size() >= b.eigenvalues.size() ? a.eigenvalues : b.eigenvalues;
  const auto& shorter = a.eigenvalues.size() >= b.eigenvalues.size() ? b.eigenvalues : a.eigenvalues;
  std::vector<double> padded(longer.size() - shorter.size(), 0.0);
  padded.insert(padded.end(), shorter.begin(), shorter.end());
  return std::sqrt(simd::active_kernels().squared_distance(longer.data(), padded.data(), longer.size()));
}

namespace {

double quadratic_form(const SymMatrix& m, std::span<const double> x) {
  const auto& k = simd::active_kernels();
  double acc = 0.0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (x[i] != 0.0) acc += x[i] * k.dot(m.row(i).data(), x.data(), x.size());
  }
  return acc;
}

}  // namespace

RayleighPair rayleigh_pair(const SymMatrix& lap, const SymMatrix& projected, const ProjectionMap& c,
                           std::span<const double> x) {
  if (x.size() != lap.order() || c.rows != lap.order() || c.column_of.size() != lap.order() ||
      projected.order() != c.cols) {
    throw ValidationError("rayleigh_pair dimension mismatch");
  }
  const auto& k = simd::active_kernels();
  std::vector<double> y(c.cols, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) y[c.column_of[i]] += x[i];

  const double xx = k.dot(x.data(), x.data(), x.size());
  const double yy = k.dot(y.data(), y.data(), y.size());
  if (xx == 0.0) throw DegenerateInputError("Rayleigh quotient of the zero vector");
  if (yy == 0.0) throw DegenerateInputError("projected vector Cᵀx is zero");
  return {quadratic_form(lap, x) / xx, quadratic_form(projected, y) / yy};
}

std::vector<std::vector<double>> rayleigh_probe_vectors(const CoarsenedGraph& cg, const ProjectionMap& c,
                                                        std::size_t budget) {
  std::vector<std::vector<double>> probes;
  const std::size_t m = cg.supernode_count;
  if (budget == 0 || m == 0) return probes;

  const SymMatrix projected(m, cg.dense_projected_laplacian());
  const auto eig = eigen_symmetric(projected, kDefaultEigenTolerance, true);
  const std::size_t lifted = std::min(m, (budget + 1) / 2);
  for (std::size_t i = 0; i < lifted; ++i) {
    std::vector<double> x(c.rows);
    for (std::size_t v = 0; v < c.rows; ++v) x[v] = eig.vectors[i][c.column_of[v]];
    probes.push_back(std::move(x));
  }

  const auto sizes = c.column_sizes();
  std::vector<BallIndex> by_size(m);
  std::iota(by_size.begin(), by_size.end(), BallIndex{0});
  std::stable_sort(by_size.begin(), by_size.end(), [&](BallIndex a, BallIndex b) { return sizes[a] > sizes[b]; });
  for (std::size_t i = 0; i < m && probes.size() < budget; ++i) {
    std::vector<double> x(c.rows, 0.0);
    for (std::size_t v = 0; v < c.rows; ++v) {
      if (c.column_of[v] == by_size[i]) x[v] = 1.0;
    }
    probes.push_back(std::move(x));
  }
  return probes;
}

SpectralReport evaluate(const Graph& g, const CoarsenedGraph& cg, const Partition& p, const EvaluateConfig& cfg) {
  SpectralReport report;
  report.laplacian_kind = cfg.laplacian_kind;
  report.sd_mode = cfg.sd_mode;
  report.r_a = achieved_ratio(p, g.node_count());

  const SymMatrix lap = laplacian(g, LaplacianKind::combinatorial);
  const SymMatrix projected(cg.supernode_count, cg.dense_projected_laplacian());

  SymMatrix original_for_sd =
      cfg.laplacian_kind == LaplacianKind::normalized ? normalize_laplacian(lap) : lap;
  SymMatrix coarse_for_sd = cfg.sd_mode == SdMode::projected
                                ? (cfg.laplacian_kind == LaplacianKind::normalized ? normalize_laplacian(projected)
                                                                                    : projected)
                                : laplacian(cg.superedge_graph(), cfg.laplacian_kind);
  report.sd = spectral_distance(eigenvalues_symmetric(original_for_sd), eigenvalues_symmetric(coarse_for_sd));

  if (cfg.rayleigh) {
    const ProjectionMap c = build_projection(p, g.node_count());
    for (const auto& x : rayleigh_probe_vectors(cg, c, cfg.rayleigh_samples)) {
      const RayleighPair rp = rayleigh_pair(lap, projected, c, x);
      const double scale = std::max(std::abs(rp.original), std::abs(rp.coarsened));
      const double gap = scale < 1e-12 ? 0.0 : std::abs(rp.coarsened - rp.original) / scale;
      report.rayleigh_samples.push_back({rp.original, rp.coarsened, gap});
    }
  }
  return report;
}

}  // namespace gbgc
