#pragma once

#include "core/means.hpp"

namespace netman {

// Tangent-space linear model: each coordinate regressed on (1, t^1..t^u)
// by ordinary least squares, residual variances by maximum likelihood
// (divisor n) so the likelihood-ratio statistic is the textbook -2 log L.
struct RegressionFit {
  Matrix coef;          // (u+1) x dim; row 0 is the intercept
  Vector sigma2;        // dim, per-coordinate MLE residual variance
  Matrix pole;          // zero matrix for the euclidean family, eta_hat for procrustes
  Matrix tangent_data;  // n x dim charted observations
  Matrix design;        // n x (u+1)
  TangentFlavor flavor = TangentFlavor::euclidean;
  Eigen::Index m = 0;
  Metric metric = Metric::sqrt;
  double alpha = 0.5;

  Eigen::Index n() const { return design.rows(); }
  Eigen::Index n_covariates() const { return design.cols() - 1; }
  Eigen::Index dim() const { return coef.cols(); }
};

struct LrtResult {
  double statistic = 0.0;
  double p_value = 1.0;
  double df = 0.0;
  bool small_sample = false;  // n < dim, where the chi-square reference is a stretch
};

RegressionFit fit_regression(const NetworkSample& sample, const AnalysisConfig& cfg);

GraphLaplacian predict(const RegressionFit& fit, const Vector& t, const AnalysisConfig& cfg);

// Fitted tangent coordinates at covariates t (before the reverse map and
// projection); used by prediction and by the fitted-path export.
Vector predict_tangent(const RegressionFit& fit, const Vector& t);

// Wilks test of H0: D_w = 0 for the 1-based covariate index w.
LrtResult lrt_covariate(const RegressionFit& fit, int w);

}  // namespace netman
