#pragma once

#include <random>

#include "core/laplacian.hpp"
#include "core/linalg.hpp"

namespace netman::testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Erdos-Renyi-ish weighted adjacency; density in (0, 1].
inline AdjacencyMatrix random_adjacency(Eigen::Index m, std::mt19937_64& gen, double density = 0.7,
                                        double max_weight = 2.0) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Matrix w = Matrix::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = j + 1; i < m; ++i)
      if (unif(gen) < density) {
        double v = max_weight * unif(gen);
        w(i, j) = v;
        w(j, i) = v;
      }
  return AdjacencyMatrix{std::move(w), {}};
}

inline GraphLaplacian random_laplacian(Eigen::Index m, std::mt19937_64& gen, double density = 0.7) {
  return from_adjacency(random_adjacency(m, gen, density));
}

// Centred symmetric gaussian noise: project a symmetric gaussian matrix
// onto the doubly-centred subspace with C_m on both sides.
inline Matrix random_centred_symmetric(Eigen::Index m, std::mt19937_64& gen, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Matrix g(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = j; i < m; ++i) {
      g(i, j) = normal(gen);
      g(j, i) = g(i, j);
    }
  Matrix c = Matrix::Identity(m, m) - Matrix::Constant(m, m, 1.0 / static_cast<double>(m));
  return c * g * c;
}

inline Matrix random_symmetric(Eigen::Index m, std::mt19937_64& gen, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Matrix g(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = j; i < m; ++i) {
      g(i, j) = normal(gen);
      g(j, i) = g(i, j);
    }
  return g;
}

// QR of a gaussian matrix with the sign convention that makes it Haar.
inline Matrix random_orthogonal(Eigen::Index m, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < m; ++i) g(i, j) = normal(gen);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

// Orthogonal matrix fixing the ones vector: block rotation in Helmert
// coordinates lifted back to R^m. Useful for exercising the procrustes
// machinery away from its rank-deficiency singularities.
inline Matrix random_orthogonal_fixing_ones(Eigen::Index m, std::mt19937_64& gen) {
  Matrix h = helmert(m);
  Matrix q = random_orthogonal(m - 1, gen);
  return h.transpose() * q * h + Matrix::Constant(m, m, 1.0 / static_cast<double>(m));
}

// Independent oracle for the projection: enumerate all 2^3 active sets of
// the m=3 sign constraints, solve each equality-constrained quadratic
// exactly, keep the feasible minimum. Dense, direct, no iterations.
inline Matrix brute_force_project_m3(const Matrix& y) {
  // pair order (column-major lower triangle): (1,0), (2,0), (2,1)
  const int pair_i[3] = {1, 2, 2};
  const int pair_j[3] = {0, 0, 1};

  // f(x) = 2 |x - y_off|^2 + |B x + y_diag|^2
  Eigen::Vector3d y_off;
  for (int k = 0; k < 3; ++k) y_off(k) = 0.5 * (y(pair_i[k], pair_j[k]) + y(pair_j[k], pair_i[k]));
  Eigen::Vector3d y_diag = y.diagonal();
  Matrix b = Matrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) {
    b(pair_i[k], k) = 1.0;
    b(pair_j[k], k) = 1.0;
  }
  Matrix hess = 4.0 * Matrix::Identity(3, 3) + 2.0 * b.transpose() * b;
  Eigen::Vector3d lin = 4.0 * y_off - 2.0 * b.transpose() * y_diag;  // grad f = H x - lin

  auto objective = [&](const Eigen::Vector3d& x) {
    return 2.0 * (x - y_off).squaredNorm() + (b * x + y_diag).squaredNorm();
  };

  double best = std::numeric_limits<double>::infinity();
  Eigen::Vector3d best_x = Eigen::Vector3d::Zero();
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> free_idx;
    for (int k = 0; k < 3; ++k)
      if (!(mask & (1 << k))) free_idx.push_back(k);
    Eigen::Vector3d x = Eigen::Vector3d::Zero();
    if (!free_idx.empty()) {
      Matrix hf(free_idx.size(), free_idx.size());
      Vector lf(free_idx.size());
      for (std::size_t p = 0; p < free_idx.size(); ++p) {
        lf(static_cast<Eigen::Index>(p)) = lin(free_idx[p]);
        for (std::size_t q = 0; q < free_idx.size(); ++q)
          hf(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
              hess(free_idx[p], free_idx[q]);
      }
      Vector xf = hf.ldlt().solve(lf);
      for (std::size_t p = 0; p < free_idx.size(); ++p) x(free_idx[p]) = xf(static_cast<Eigen::Index>(p));
    }
    bool feasible = x(0) <= 1e-12 && x(1) <= 1e-12 && x(2) <= 1e-12;
    if (!feasible) continue;
    double val = objective(x);
    if (val < best) {
      best = val;
      best_x = x;
    }
  }

  Matrix l = Matrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) {
    double v = std::min(best_x(k), 0.0);
    l(pair_i[k], pair_j[k]) = v;
    l(pair_j[k], pair_i[k]) = v;
  }
  for (int i = 0; i < 3; ++i) l(i, i) = -l.row(i).sum();
  return l;
}

}  // namespace netman::testutil
