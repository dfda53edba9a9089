#pragma once

#include "core/means.hpp"

namespace netman {

// Tangent-space PCA about the embedding-space mean. `tangent_data` keeps
// the charted sample (rows are observations) so scores stay reproducible
// from the stored coordinates.
struct PCAResult {
  Matrix pole;            // eta_hat, the tangent pole
  Vector eigenvalues;     // descending, strictly positive; r entries
  Matrix components;      // dim x r, orthonormal columns
  Matrix scores;          // n x r
  Vector variance_ratio;  // eigenvalue / trace(S)
  double total_variance = 0.0;
  Matrix tangent_data;    // n x dim
  TangentFlavor flavor = TangentFlavor::euclidean;
  Eigen::Index m = 0;
  Metric metric = Metric::sqrt;
  double alpha = 0.5;

  Eigen::Index rank() const { return eigenvalues.size(); }
};

// Eigenstructure of S = (1/n) sum v v^t. Solved through the n x n Gram
// matrix whenever n < dim, which is what makes m = 1000 tractable.
// A degenerate sample (all observations equal) comes back with rank 0.
PCAResult tangent_pca(const NetworkSample& sample, const AnalysisConfig& cfg);

// Path of the j-th component (1-based j): P_L(G(pi_nu(c sqrt(lambda_j) gamma_j))).
GraphLaplacian pc_path(const PCAResult& pca, int j, double c, const AnalysisConfig& cfg);

// Scores of an out-of-sample Laplacian in the fitted component basis.
Vector pca_project(const PCAResult& pca, const GraphLaplacian& l, const AnalysisConfig& cfg);

// Share of the j-th component's tangent matrix carried by each node's
// diagonal entry; defined for the euclidean metric at alpha = 1.
Vector word_importance(const PCAResult& pca, int j);

}  // namespace netman
