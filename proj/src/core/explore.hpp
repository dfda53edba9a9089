#pragma once

#include "core/means.hpp"

namespace netman {

// Pairwise distances under the configured metric; symmetric, zero diagonal.
Matrix distance_matrix(const NetworkSample& sample, const AnalysisConfig& cfg);

struct MdsResult {
  Matrix coordinates;      // n x k
  Vector eigenvalues;      // all n, descending
  int negative_truncated;  // axes among the requested k with negative eigenvalues
};

// Classical (Torgerson) scaling of a distance matrix.
MdsResult classical_mds(const Matrix& dist, Eigen::Index k);

struct WardMerge {
  int left = 0;   // cluster ids; 0..n-1 are singletons, n+s is the cluster born at step s
  int right = 0;
  double height = 0.0;
};

// Agglomerative clustering under the Ward criterion via Lance-Williams
// updates. squared=true runs the recurrence on squared distances and
// reports square-rooted heights (the ward.D2 convention); squared=false
// applies the recurrence to the distances as given.
std::vector<WardMerge> ward_clustering(const Matrix& dist, bool squared = true);

}  // namespace netman
