#pragma once

#include "core/config.hpp"
#include "core/laplacian.hpp"

namespace netman {

// Image F_alpha(L) in the embedding manifold: centred symmetric matrix
// together with the power that produced it.
struct EmbeddedPoint {
  Matrix matrix;
  double alpha = 1.0;

  Eigen::Index dim() const { return matrix.rows(); }
};

// Spectral power of a symmetric PSD matrix. Eigenvalues in
// (-eps_negative, 0) are clamped to zero before powering; anything more
// negative is an error.
Matrix psd_power(const Matrix& s, double power, double eps_negative);

// U Xi^alpha Ut. For alpha = 1 this is the input, exactly.
EmbeddedPoint f_alpha(const GraphLaplacian& l, double alpha, const Tolerances& tol = {});
EmbeddedPoint embed(const GraphLaplacian& l, const AnalysisConfig& cfg);

// The reverse power map G_alpha; `q` need not be symmetric for the Gram
// variants. Variants other than odd_integer_power return symmetric PSD.
Matrix g_alpha(const Matrix& q, double alpha, ReverseMap variant, const Tolerances& tol = {});

// Orthogonal matrix R minimising |x - y R|_F over the full orthogonal
// group (reflections permitted), via SVD of Yt X. Ties from degenerate
// spectra resolve to the decomposition's deterministic output.
Matrix opa(const Matrix& x, const Matrix& y);

double frobenius_distance(const Matrix& x, const Matrix& y);
// min_R |x - y R|_F
double procrustes_matrix_distance(const Matrix& x, const Matrix& y);

double dist_euclidean(const GraphLaplacian& l1, const GraphLaplacian& l2, double alpha,
                      const Tolerances& tol = {});
double dist_procrustes(const GraphLaplacian& l1, const GraphLaplacian& l2, double alpha,
                       const Tolerances& tol = {});

// Dispatch on the configured metric.
double dist(const GraphLaplacian& l1, const GraphLaplacian& l2, const AnalysisConfig& cfg);

}  // namespace netman
