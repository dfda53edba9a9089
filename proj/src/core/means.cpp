#include "core/means.hpp"

#include <cmath>

namespace netman {

namespace {

Matrix average(const std::vector<Matrix>& points) {
  Matrix acc = Matrix::Zero(points.front().rows(), points.front().cols());
  for (const auto& p : points) acc += p;  // fixed order keeps runs reproducible
  return acc / static_cast<double>(points.size());
}

ReverseMap path_reverse_map(const AnalysisConfig& cfg) {
  if (cfg.reverse_map_overridden) return cfg.reverse_map;
  if (cfg.is_procrustes()) return ReverseMap::right_gram;
  return cfg.effective_reverse_map();
}

}  // namespace

Matrix gpa_mean(const std::vector<Matrix>& points, unsigned threads, int* iterations_out,
                double* delta_out) {
  if (points.empty()) throw validation_error("gpa: empty sample");
  constexpr int kMaxIter = 100;
  constexpr double kTol = 1e-9;
  Matrix eta = points.front();
  std::vector<Matrix> aligned(points.size());
  double delta = 0.0;
  bool settled = false;
  for (int it = 1; it <= kMaxIter; ++it) {
    parallel_for(points.size(), threads, [&](std::size_t k) {
      aligned[k] = points[k] * opa(eta, points[k]);
    });
    Matrix eta_new = average(aligned);
    delta = (eta_new - eta).norm();
    eta = std::move(eta_new);
    if (delta < kTol) {
      settled = true;
      if (iterations_out) *iterations_out = it;
      if (delta_out) *delta_out = delta;
      break;
    }
  }
  if (!settled)
    throw numerical_error("gpa: mean did not settle in " + std::to_string(kMaxIter) +
                          " iterations (last movement " + std::to_string(delta) + ")");
  // The fixed point is reached in the frame of the initial element, so its
  // representative would depend on sample order. Re-anchoring to the raw
  // average (order-invariant) picks one representative of the same shape.
  Matrix ref = average(points);
  return eta * opa(ref, eta);
}

EmbeddedSample embed_sample(const NetworkSample& sample, const AnalysisConfig& cfg) {
  if (sample.size() == 0) throw validation_error("mean: empty sample");
  sample.validate();
  EmbeddedSample out;
  out.points.resize(sample.size());
  double alpha = cfg.effective_alpha();
  parallel_for(sample.size(), cfg.threads, [&](std::size_t k) {
    out.points[k] = f_alpha(sample.observations[k], alpha, cfg.tol).matrix;
  });
  if (cfg.is_procrustes()) {
    out.eta_hat = gpa_mean(out.points, cfg.threads, &out.gpa_iterations, &out.gpa_delta);
  } else {
    out.eta_hat = average(out.points);
  }
  return out;
}

MeanResult mean(const NetworkSample& sample, const AnalysisConfig& cfg) {
  EmbeddedSample es = embed_sample(sample, cfg);
  Matrix back = g_alpha(es.eta_hat, cfg.effective_alpha(), cfg.effective_reverse_map(), cfg.tol);
  GraphLaplacian mu = project_to_laplacian(back, cfg.qp, cfg.tol);
  if (!sample.observations.front().node_labels().empty())
    mu.set_node_labels(sample.observations.front().node_labels());
  return MeanResult{std::move(es.eta_hat), std::move(mu), cfg.metric, cfg.effective_alpha(),
                    es.gpa_iterations, es.gpa_delta};
}

GraphLaplacian interpolate(const GraphLaplacian& l1, const GraphLaplacian& l2, double c,
                           const AnalysisConfig& cfg) {
  return interpolate_many(l1, l2, {c}, cfg).front();
}

std::vector<GraphLaplacian> interpolate_many(const GraphLaplacian& l1, const GraphLaplacian& l2,
                                             const std::vector<double>& cs,
                                             const AnalysisConfig& cfg) {
  if (l1.dim() != l2.dim()) throw validation_error("interpolate: dimension mismatch");
  double alpha = cfg.effective_alpha();
  Matrix nu = f_alpha(l1, alpha, cfg.tol).matrix;
  Matrix x2 = f_alpha(l2, alpha, cfg.tol).matrix;
  ReverseMap g = path_reverse_map(cfg);
  ProjectionSolver solver(l1.dim(), cfg.qp, cfg.tol);  // warm-started along the path

  std::vector<GraphLaplacian> out;
  out.reserve(cs.size());
  if (cfg.is_procrustes()) {
    TangentVector q = to_tangent_procrustes(x2, nu);
    for (double c : cs) {
      TangentVector qc = q;
      qc.coords *= c;
      Matrix point = from_tangent_procrustes(qc, nu);
      out.push_back(solver.project(g_alpha(point, alpha, g, cfg.tol)));
    }
  } else {
    // geodesic in the flat embedding: nu + c (x2 - nu)
    for (double c : cs) {
      Matrix point = nu + c * (x2 - nu);
      out.push_back(solver.project(g_alpha(point, alpha, g, cfg.tol)));
    }
  }
  if (!l1.node_labels().empty())
    for (auto& l : out) l.set_node_labels(l1.node_labels());
  return out;
}

}  // namespace netman
