#pragma once

#include "core/projection.hpp"
#include "core/tangent.hpp"

namespace netman {

struct MeanResult {
  Matrix eta_hat;          // embedding-space mean; non-symmetric in general for procrustes
  GraphLaplacian mu_hat;   // P_L(G_alpha(eta_hat))
  Metric metric = Metric::sqrt;
  double alpha = 0.5;
  int gpa_iterations = 0;  // 0 for the euclidean family
  double gpa_delta = 0.0;
};

// Embeddings of all observations plus their embedding-space mean under
// the configured metric (arithmetic average, or the generalized
// Procrustes fixed point for the procrustes metric).
struct EmbeddedSample {
  std::vector<Matrix> points;  // F_alpha images, unaligned
  Matrix eta_hat;
  int gpa_iterations = 0;
  double gpa_delta = 0.0;
};

EmbeddedSample embed_sample(const NetworkSample& sample, const AnalysisConfig& cfg);

// Generalized Procrustes mean of already-embedded points: align every
// point to the running mean, average, repeat until the mean moves less
// than 1e-9 (at most 100 iterations; failure to settle is an error).
Matrix gpa_mean(const std::vector<Matrix>& points, unsigned threads, int* iterations_out = nullptr,
                double* delta_out = nullptr);

MeanResult mean(const NetworkSample& sample, const AnalysisConfig& cfg);

// Interpolation (0 <= c <= 1) and extrapolation path through L1 at c=0
// and L2 at c=1; the projection keeps every path point feasible for any
// c. For the procrustes metric the reverse map defaults to the Gram
// variant that cancels the tangent chart's orthogonal factor, so the
// endpoints reproduce the inputs; an explicit reverse-map override wins.
GraphLaplacian interpolate(const GraphLaplacian& l1, const GraphLaplacian& l2, double c,
                           const AnalysisConfig& cfg);
std::vector<GraphLaplacian> interpolate_many(const GraphLaplacian& l1, const GraphLaplacian& l2,
                                             const std::vector<double>& cs,
                                             const AnalysisConfig& cfg);

}  // namespace netman
