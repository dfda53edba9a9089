#include "core/pca.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace netman {

namespace {

// keep eigenvalues carrying real variance; the cutoff is relative to the
// leading one so scale never matters
std::vector<Eigen::Index> significant_descending(const Vector& evals_ascending) {
  std::vector<Eigen::Index> keep;
  Eigen::Index n = evals_ascending.size();
  if (n == 0) return keep;
  double top = evals_ascending(n - 1);
  if (top <= 0.0) return keep;
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    double v = evals_ascending(i);
    if (v > 0.0 && v > 1e-12 * top) keep.push_back(i);
  }
  return keep;
}

void fix_signs(Matrix& components, Matrix& scores) {
  for (Eigen::Index j = 0; j < components.cols(); ++j) {
    Eigen::Index imax = 0;
    components.col(j).cwiseAbs().maxCoeff(&imax);
    if (components(imax, j) < 0.0) {
      components.col(j) = -components.col(j);
      scores.col(j) = -scores.col(j);
    }
  }
}

}  // namespace

PCAResult tangent_pca(const NetworkSample& sample, const AnalysisConfig& cfg) {
  if (sample.size() < 2) throw validation_error("pca: need at least 2 observations");
  EmbeddedSample es = embed_sample(sample, cfg);
  const Eigen::Index n = static_cast<Eigen::Index>(sample.size());

  PCAResult out;
  out.pole = es.eta_hat;
  out.flavor = cfg.is_procrustes() ? TangentFlavor::procrustes : TangentFlavor::euclidean;
  out.m = sample.dim();
  out.metric = cfg.metric;
  out.alpha = cfg.effective_alpha();

  Eigen::Index dim = 0;
  {
    TangentVector v0 = to_tangent(es.points[0], es.eta_hat, cfg);
    dim = v0.coords.size();
    out.tangent_data.resize(n, dim);
    out.tangent_data.row(0) = v0.coords.transpose();
  }
  std::vector<Vector> rows(n);
  parallel_for(static_cast<std::size_t>(n) - 1, cfg.threads, [&](std::size_t k) {
    rows[k + 1] = to_tangent(es.points[k + 1], es.eta_hat, cfg).coords;
  });
  for (Eigen::Index k = 1; k < n; ++k) out.tangent_data.row(k) = rows[k].transpose();

  out.total_variance = out.tangent_data.squaredNorm() / static_cast<double>(n);
  if (out.total_variance <= 0.0 ||
      out.tangent_data.rowwise().norm().maxCoeff() < 1e-14 * (1.0 + es.eta_hat.norm())) {
    // all observations coincide with the pole
    out.eigenvalues.resize(0);
    out.components.resize(dim, 0);
    out.scores.resize(n, 0);
    out.variance_ratio.resize(0);
    return out;
  }

  Matrix components;
  Vector eigenvalues;
  if (n < dim) {
    // Gram trick: S = Vt V / n shares nonzero eigenvalues with V Vt / n
    Matrix gram = out.tangent_data * out.tangent_data.transpose() / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Matrix> es_g(gram);
    if (es_g.info() != Eigen::Success) throw numerical_error("pca: eigendecomposition failed");
    auto keep = significant_descending(es_g.eigenvalues());
    eigenvalues.resize(static_cast<Eigen::Index>(keep.size()));
    components.resize(dim, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
      double lambda = es_g.eigenvalues()(keep[j]);
      eigenvalues(static_cast<Eigen::Index>(j)) = lambda;
      Vector a = es_g.eigenvectors().col(keep[j]);
      components.col(static_cast<Eigen::Index>(j)) =
          out.tangent_data.transpose() * a / std::sqrt(static_cast<double>(n) * lambda);
    }
  } else {
    Matrix s = out.tangent_data.transpose() * out.tangent_data / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Matrix> es_s(s);
    if (es_s.info() != Eigen::Success) throw numerical_error("pca: eigendecomposition failed");
    auto keep = significant_descending(es_s.eigenvalues());
    eigenvalues.resize(static_cast<Eigen::Index>(keep.size()));
    components.resize(dim, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
      eigenvalues(static_cast<Eigen::Index>(j)) = es_s.eigenvalues()(keep[j]);
      components.col(static_cast<Eigen::Index>(j)) = es_s.eigenvectors().col(keep[j]);
    }
  }

  out.eigenvalues = std::move(eigenvalues);
  out.components = std::move(components);
  out.scores = out.tangent_data * out.components;
  fix_signs(out.components, out.scores);
  out.variance_ratio = out.eigenvalues / out.total_variance;
  return out;
}

GraphLaplacian pc_path(const PCAResult& pca, int j, double c, const AnalysisConfig& cfg) {
  if (j < 1 || j > pca.rank()) throw validation_error("pc_path: component index out of range");
  if (cfg.is_procrustes() != (pca.flavor == TangentFlavor::procrustes))
    throw validation_error("pc_path: config metric disagrees with the fitted result");
  TangentVector q{c * std::sqrt(pca.eigenvalues(j - 1)) * pca.components.col(j - 1), pca.flavor,
                  pca.m};
  Matrix point = from_tangent(q, pca.pole, cfg);
  Matrix back = g_alpha(point, pca.alpha, cfg.effective_reverse_map(), cfg.tol);
  return project_to_laplacian(back, cfg.qp, cfg.tol);
}

Vector pca_project(const PCAResult& pca, const GraphLaplacian& l, const AnalysisConfig& cfg) {
  if (cfg.is_procrustes() != (pca.flavor == TangentFlavor::procrustes))
    throw validation_error("pca_project: config metric disagrees with the fitted result");
  if (l.dim() != pca.m) throw validation_error("pca_project: dimension mismatch");
  Matrix x = f_alpha(l, pca.alpha, cfg.tol).matrix;
  TangentVector v = to_tangent(x, pca.pole, cfg);
  return (v.coords.transpose() * pca.components).transpose();
}

Vector word_importance(const PCAResult& pca, int j) {
  if (j < 1 || j > pca.rank()) throw validation_error("word_importance: component index out of range");
  if (pca.flavor != TangentFlavor::euclidean || pca.alpha != 1.0)
    throw validation_error("word_importance: defined for the euclidean metric at alpha = 1");
  // diagonal shares of the reconstructed point pi_nu(gamma); with
  // trace-normalized data the pole contributes trace 1 and the tangent
  // direction is traceless, so the shares are well defined
  Matrix reconstructed = pca.pole + helmert_unsandwich(vech_star_inv(pca.components.col(j - 1)));
  Vector diag = reconstructed.diagonal();
  double tr = diag.sum();
  if (diag.cwiseAbs().sum() == 0.0 || std::abs(tr) < 1e-10 * diag.cwiseAbs().sum())
    throw numerical_error("word_importance: component has a degenerate (traceless) diagonal");
  return diag / tr;
}

}  // namespace netman
