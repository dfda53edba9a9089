#include "core/regression.hpp"

#include <Eigen/QR>

#include <cmath>

#include "core/stats_util.hpp"

namespace netman {

namespace {

// OLS of every column of y on x at once; rejects rank-deficient designs.
Matrix ols(const Matrix& x, const Matrix& y, const char* who) {
  Eigen::ColPivHouseholderQR<Matrix> qr(x);
  qr.setThreshold(1e-10);
  if (qr.rank() < x.cols())
    throw validation_error(std::string(who) +
                           ": design matrix is rank deficient (constant or collinear covariate)");
  return qr.solve(y);
}

Vector residual_variances(const Matrix& x, const Matrix& y, const Matrix& beta) {
  Matrix resid = y - x * beta;
  return resid.colwise().squaredNorm().transpose() / static_cast<double>(y.rows());
}

void check_not_degenerate(const Vector& sigma2, const Matrix& y) {
  Vector second_moment = y.colwise().squaredNorm().transpose() / static_cast<double>(y.rows());
  for (Eigen::Index c = 0; c < sigma2.size(); ++c) {
    if (sigma2(c) <= 1e-20 * second_moment(c) + 1e-300)
      throw numerical_error("regression: residual variance vanishes in coordinate " +
                            std::to_string(c) + " (perfect fit); likelihood ratio undefined");
  }
}

}  // namespace

RegressionFit fit_regression(const NetworkSample& sample, const AnalysisConfig& cfg) {
  sample.validate();
  if (sample.covariates.empty())
    throw validation_error("regression: sample carries no covariates");
  const Eigen::Index n = static_cast<Eigen::Index>(sample.size());
  const Eigen::Index u = sample.covariate_dim();
  if (n <= u + 1)
    throw validation_error("regression: need more observations than parameters (n > u + 1)");

  RegressionFit out;
  out.metric = cfg.metric;
  out.alpha = cfg.effective_alpha();
  out.m = sample.dim();
  out.flavor = cfg.is_procrustes() ? TangentFlavor::procrustes : TangentFlavor::euclidean;

  if (cfg.is_procrustes()) {
    EmbeddedSample es = embed_sample(sample, cfg);
    out.pole = es.eta_hat;
    Eigen::Index dim = (out.m - 1) * (out.m - 1);
    out.tangent_data.resize(n, dim);
    std::vector<Vector> rows(n);
    parallel_for(static_cast<std::size_t>(n), cfg.threads, [&](std::size_t k) {
      rows[k] = to_tangent_procrustes(es.points[k], es.eta_hat).coords;
    });
    for (Eigen::Index k = 0; k < n; ++k) out.tangent_data.row(k) = rows[k].transpose();
  } else {
    // euclidean family charts at the zero pole
    out.pole = Matrix::Zero(out.m, out.m);
    Eigen::Index dim = out.m * (out.m - 1) / 2;
    out.tangent_data.resize(n, dim);
    double alpha = out.alpha;
    std::vector<Vector> rows(n);
    parallel_for(static_cast<std::size_t>(n), cfg.threads, [&](std::size_t k) {
      EmbeddedPoint x = f_alpha(sample.observations[k], alpha, cfg.tol);
      rows[k] = to_tangent_euclidean(x, EmbeddedPoint{Matrix::Zero(out.m, out.m), alpha}).coords;
    });
    for (Eigen::Index k = 0; k < n; ++k) out.tangent_data.row(k) = rows[k].transpose();
  }

  out.design.resize(n, u + 1);
  out.design.col(0).setOnes();
  for (Eigen::Index k = 0; k < n; ++k)
    out.design.row(k).tail(u) = sample.covariates[k].transpose();

  out.coef = ols(out.design, out.tangent_data, "regression");
  out.sigma2 = residual_variances(out.design, out.tangent_data, out.coef);
  return out;
}

Vector predict_tangent(const RegressionFit& fit, const Vector& t) {
  if (t.size() != fit.n_covariates())
    throw validation_error("predict: covariate length mismatch");
  Vector x(fit.design.cols());
  x(0) = 1.0;
  x.tail(t.size()) = t;
  return (x.transpose() * fit.coef).transpose();
}

GraphLaplacian predict(const RegressionFit& fit, const Vector& t, const AnalysisConfig& cfg) {
  if (cfg.is_procrustes() != (fit.flavor == TangentFlavor::procrustes))
    throw validation_error("predict: config metric disagrees with the fitted model");
  TangentVector q{predict_tangent(fit, t), fit.flavor, fit.m};
  Matrix point = from_tangent(q, fit.pole, cfg);
  Matrix back = g_alpha(point, fit.alpha, cfg.effective_reverse_map(), cfg.tol);
  return project_to_laplacian(back, cfg.qp, cfg.tol);
}

LrtResult lrt_covariate(const RegressionFit& fit, int w) {
  if (w < 1 || w > fit.n_covariates())
    throw validation_error("lrt: covariate index out of range");
  const Eigen::Index n = fit.n();

  // null design drops column w (1-based among covariates; 0 is intercept)
  Matrix null_design(n, fit.design.cols() - 1);
  Eigen::Index c = 0;
  for (Eigen::Index j = 0; j < fit.design.cols(); ++j)
    if (j != w) null_design.col(c++) = fit.design.col(j);

  Matrix beta0 = ols(null_design, fit.tangent_data, "lrt");
  Vector sigma2_null = residual_variances(null_design, fit.tangent_data, beta0);
  check_not_degenerate(fit.sigma2, fit.tangent_data);
  check_not_degenerate(sigma2_null, fit.tangent_data);

  double t_stat = 0.0;
  for (Eigen::Index j = 0; j < fit.sigma2.size(); ++j)
    t_stat += static_cast<double>(n) * std::log(sigma2_null(j) / fit.sigma2(j));
  if (t_stat < 0.0) t_stat = 0.0;  // guards rounding; nested models give >= 0

  LrtResult out;
  out.statistic = t_stat;
  out.df = static_cast<double>(fit.dim());
  out.p_value = chi2_sf(t_stat, out.df);
  out.small_sample = n < fit.dim();
  return out;
}

}  // namespace netman
