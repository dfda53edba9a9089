#include "core/explore.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace netman {

Matrix distance_matrix(const NetworkSample& sample, const AnalysisConfig& cfg) {
  if (sample.size() < 2) throw validation_error("distance matrix: need at least 2 observations");
  sample.validate();
  const auto n = static_cast<Eigen::Index>(sample.size());
  double alpha = cfg.effective_alpha();

  std::vector<Matrix> points(sample.size());
  parallel_for(sample.size(), cfg.threads, [&](std::size_t k) {
    points[k] = f_alpha(sample.observations[k], alpha, cfg.tol).matrix;
  });

  Matrix d = Matrix::Zero(n, n);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  pairs.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  parallel_for(pairs.size(), cfg.threads, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    double v = cfg.is_procrustes() ? procrustes_matrix_distance(points[i], points[j])
                                   : frobenius_distance(points[i], points[j]);
    d(i, j) = v;
    d(j, i) = v;
  });
  return d;
}

MdsResult classical_mds(const Matrix& dist, Eigen::Index k) {
  const Eigen::Index n = dist.rows();
  if (n < 2 || dist.cols() != n) throw validation_error("mds: distance matrix must be square, n >= 2");
  if (k < 1 || k > n - 1) throw validation_error("mds: output dimension must lie in [1, n-1]");

  Matrix d2 = dist.cwiseProduct(dist);
  Vector row_mean = d2.rowwise().mean();
  double grand = d2.mean();
  Matrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      b(i, j) = -0.5 * (d2(i, j) - row_mean(i) - row_mean(j) + grand);

  Eigen::SelfAdjointEigenSolver<Matrix> es(b);
  if (es.info() != Eigen::Success) throw numerical_error("mds: eigendecomposition failed");

  MdsResult out;
  out.eigenvalues = es.eigenvalues().reverse();
  out.coordinates = Matrix::Zero(n, k);
  out.negative_truncated = 0;
  for (Eigen::Index j = 0; j < k; ++j) {
    double lambda = out.eigenvalues(j);
    if (lambda > 0.0) {
      out.coordinates.col(j) = es.eigenvectors().col(n - 1 - j) * std::sqrt(lambda);
    } else {
      ++out.negative_truncated;  // non-euclidean input; axis zeroed
    }
  }
  return out;
}

std::vector<WardMerge> ward_clustering(const Matrix& dist, bool squared) {
  const Eigen::Index n = dist.rows();
  if (n < 2 || dist.cols() != n) throw validation_error("ward: distance matrix must be square, n >= 2");

  Matrix w = squared ? dist.cwiseProduct(dist).eval() : dist;
  std::vector<int> id(n);       // current cluster id per slot
  std::vector<double> size(n);  // cluster sizes
  std::vector<bool> alive(n, true);
  for (Eigen::Index i = 0; i < n; ++i) {
    id[i] = static_cast<int>(i);
    size[i] = 1.0;
  }

  std::vector<WardMerge> merges;
  merges.reserve(static_cast<std::size_t>(n - 1));
  for (int step = 0; step < static_cast<int>(n) - 1; ++step) {
    Eigen::Index bi = -1, bj = -1;
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        if (bi < 0 || w(i, j) < best) {
          best = w(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    WardMerge merge;
    merge.left = std::min(id[bi], id[bj]);
    merge.right = std::max(id[bi], id[bj]);
    merge.height = squared ? std::sqrt(std::max(best, 0.0)) : best;
    merges.push_back(merge);

    // Lance-Williams update for the Ward criterion
    double ni = size[bi], nj = size[bj];
    for (Eigen::Index t = 0; t < n; ++t) {
      if (!alive[t] || t == bi || t == bj) continue;
      double nt = size[t];
      double v = ((ni + nt) * w(bi, t) + (nj + nt) * w(bj, t) - nt * best) / (ni + nj + nt);
      w(bi, t) = v;
      w(t, bi) = v;
    }
    alive[bj] = false;
    size[bi] = ni + nj;
    id[bi] = static_cast<int>(n) + step;
  }
  return merges;
}

}  // namespace netman
