#include "core/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace netman {

namespace {

Eigen::SelfAdjointEigenSolver<Matrix> eigen_sym(const Matrix& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  if (es.info() != Eigen::Success) throw numerical_error("eigendecomposition failed to converge");
  return es;
}

struct SvdFull {
  Matrix u;
  Vector s;
  Matrix v;
};

// Divide-and-conquer kicks in for larger problems; Jacobi is more
// accurate for the small ones the tests lean on.
SvdFull svd_full(const Matrix& m) {
  if (m.rows() <= 32 && m.cols() <= 32) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
  }
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw numerical_error("singular value decomposition failed");
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

bool is_odd_integer_reciprocal(double alpha, long& k_out) {
  if (!(alpha > 0.0)) return false;
  double k = 1.0 / alpha;
  long rounded = static_cast<long>(std::llround(k));
  if (std::abs(k - static_cast<double>(rounded)) > 1e-9) return false;
  if (rounded % 2 == 0) return false;
  k_out = rounded;
  return true;
}

}  // namespace

Matrix psd_power(const Matrix& s, double power, double eps_negative) {
  auto es = eigen_sym(s);
  Vector xi = es.eigenvalues();
  for (Eigen::Index i = 0; i < xi.size(); ++i) {
    if (xi(i) < 0.0) {
      if (xi(i) < -eps_negative)
        throw numerical_error("matrix power: eigenvalue " + std::to_string(xi(i)) +
                              " below the PSD tolerance");
      xi(i) = 0.0;
    }
  }
  Vector powered(xi.size());
  for (Eigen::Index i = 0; i < xi.size(); ++i)
    powered(i) = xi(i) == 0.0 ? 0.0 : std::pow(xi(i), power);
  return es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().transpose();
}

EmbeddedPoint f_alpha(const GraphLaplacian& l, double alpha, const Tolerances& tol) {
  if (!(alpha > 0.0)) throw validation_error("f_alpha: power must be positive");
  if (alpha == 1.0) return EmbeddedPoint{l.entries(), 1.0};
  // Power in Helmert coordinates: L = Ht (H L Ht) H for centred symmetric
  // L, and the sandwiched matrix shares the nonzero spectrum. Deflating
  // the ones-kernel this way keeps the image exactly centred; powering L
  // directly would turn the kernel's rounding noise into sqrt-scale
  // leakage along the ones direction.
  Matrix core = helmert_sandwich(l.entries());
  core = 0.5 * (core + core.transpose()).eval();
  Matrix powered = psd_power(core, alpha, tol.eps_psd(l.trace()));
  Matrix x = helmert_unsandwich(powered);
  x = 0.5 * (x + x.transpose()).eval();
  return EmbeddedPoint{std::move(x), alpha};
}

EmbeddedPoint embed(const GraphLaplacian& l, const AnalysisConfig& cfg) {
  return f_alpha(l, cfg.effective_alpha(), cfg.tol);
}

Matrix g_alpha(const Matrix& q, double alpha, ReverseMap variant, const Tolerances& tol) {
  if (!(alpha > 0.0)) throw validation_error("g_alpha: power must be positive");
  switch (variant) {
    case ReverseMap::odd_integer_power: {
      long k = 0;
      if (!is_odd_integer_reciprocal(alpha, k))
        throw validation_error("g_alpha: odd-integer-power variant needs 1/alpha an odd integer");
      if (max_asymmetry(q) > tol.eps_sym)
        throw validation_error("g_alpha: odd-integer-power variant needs a symmetric input");
      if (k == 1) return q;
      auto es = eigen_sym(0.5 * (q + q.transpose()));
      Vector xi = es.eigenvalues();
      for (Eigen::Index i = 0; i < xi.size(); ++i)
        xi(i) = std::pow(xi(i), static_cast<double>(k));  // odd power keeps sign
      return es.eigenvectors() * xi.asDiagonal() * es.eigenvectors().transpose();
    }
    case ReverseMap::nearest_psd_then_power: {
      // (B + (Bt B)^{1/2})/2 with B the symmetric part is Higham's nearest
      // PSD matrix; in eigenvalue terms it clamps the negatives to zero.
      auto es = eigen_sym(0.5 * (q + q.transpose()));
      Vector xi = es.eigenvalues().cwiseMax(0.0);
      for (Eigen::Index i = 0; i < xi.size(); ++i)
        xi(i) = xi(i) == 0.0 ? 0.0 : std::pow(xi(i), 1.0 / alpha);
      return es.eigenvectors() * xi.asDiagonal() * es.eigenvectors().transpose();
    }
    case ReverseMap::right_gram:
    case ReverseMap::left_gram: {
      // (Q Qt)^{1/(2a)} = W S^{1/a} Wt and (Qt Q)^{1/(2a)} = Z S^{1/a} Zt
      // from Q = W S Zt; the SVD route avoids squaring the condition number.
      auto svd = svd_full(q);
      Vector s = svd.s;
      for (Eigen::Index i = 0; i < s.size(); ++i)
        s(i) = s(i) == 0.0 ? 0.0 : std::pow(s(i), 1.0 / alpha);
      if (variant == ReverseMap::right_gram)
        return svd.u * s.asDiagonal() * svd.u.transpose();
      return svd.v * s.asDiagonal() * svd.v.transpose();
    }
  }
  throw validation_error("g_alpha: unknown reverse-map variant");
}

Matrix opa(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw validation_error("opa: shape mismatch");
  auto svd = svd_full(y.transpose() * x);

  // Numerically-zero singular directions (graph Laplacians always carry
  // at least the ones-kernel) leave the optimizer free on that block, and
  // the raw SVD pairing injects sign flips of size sqrt(eps) into the
  // realized residual. Among the optimal completions take the one of
  // minimal rotation: max trace(R) over the free block, itself a small
  // orthogonal Procrustes problem.
  const Eigen::Index n = svd.s.size();
  double cutoff = 1e-12 * (n > 0 ? svd.s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < n && svd.s(rank) > cutoff) ++rank;
  if (rank == n) return svd.u * svd.v.transpose();

  Eigen::Index k = n - rank;
  Matrix u0 = svd.u.rightCols(k);
  Matrix v0 = svd.v.rightCols(k);
  auto block = svd_full(v0.transpose() * u0);
  Matrix o = block.v * block.u.transpose();
  return svd.u.leftCols(rank) * svd.v.leftCols(rank).transpose() + u0 * o * v0.transpose();
}

double frobenius_distance(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw validation_error("distance: shape mismatch");
  return (x - y).norm();
}

double procrustes_matrix_distance(const Matrix& x, const Matrix& y) {
  Matrix r = opa(x, y);
  return (x - y * r).norm();
}

double dist_euclidean(const GraphLaplacian& l1, const GraphLaplacian& l2, double alpha,
                      const Tolerances& tol) {
  if (l1.dim() != l2.dim()) throw validation_error("distance: dimension mismatch");
  return frobenius_distance(f_alpha(l1, alpha, tol).matrix, f_alpha(l2, alpha, tol).matrix);
}

double dist_procrustes(const GraphLaplacian& l1, const GraphLaplacian& l2, double alpha,
                       const Tolerances& tol) {
  if (l1.dim() != l2.dim()) throw validation_error("distance: dimension mismatch");
  return procrustes_matrix_distance(f_alpha(l1, alpha, tol).matrix, f_alpha(l2, alpha, tol).matrix);
}

double dist(const GraphLaplacian& l1, const GraphLaplacian& l2, const AnalysisConfig& cfg) {
  double a = cfg.effective_alpha();
  return cfg.is_procrustes() ? dist_procrustes(l1, l2, a, cfg.tol)
                             : dist_euclidean(l1, l2, a, cfg.tol);
}

std::string to_string(Metric m) {
  switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::sqrt: return "sqrt";
    case Metric::procrustes: return "procrustes";
  }
  return "?";
}

std::string to_string(ReverseMap g) {
  switch (g) {
    case ReverseMap::odd_integer_power: return "odd_integer_power";
    case ReverseMap::nearest_psd_then_power: return "nearest_psd_then_power";
    case ReverseMap::right_gram: return "right_gram";
    case ReverseMap::left_gram: return "left_gram";
  }
  return "?";
}

Metric metric_from_string(const std::string& s) {
  if (s == "euclidean") return Metric::euclidean;
  if (s == "sqrt") return Metric::sqrt;
  if (s == "procrustes") return Metric::procrustes;
  throw validation_error("unknown metric '" + s + "' (expected euclidean, sqrt or procrustes)");
}

}  // namespace netman
