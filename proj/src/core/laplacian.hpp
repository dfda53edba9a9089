#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/linalg.hpp"

namespace netman {

// Symmetric nonnegative weights with a zero diagonal.
struct AdjacencyMatrix {
  Matrix weights;
  std::vector<std::string> node_labels;  // optional, empty when absent

  Eigen::Index dim() const { return weights.rows(); }
  void validate(const Tolerances& tol = {}) const;
};

// A point of the graph-Laplacian polytope: symmetric, nonpositive
// off-diagonals, zero row sums. Construct via make(), from_adjacency()
// or trace_normalize(); all of them validate.
class GraphLaplacian {
public:
  static GraphLaplacian make(Matrix entries, std::vector<std::string> node_labels = {},
                             const Tolerances& tol = {});

  const Matrix& entries() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const std::vector<std::string>& node_labels() const { return labels_; }
  void set_node_labels(std::vector<std::string> labels);

  double trace() const { return entries_.trace(); }

private:
  GraphLaplacian(Matrix entries, std::vector<std::string> labels)
      : entries_(std::move(entries)), labels_(std::move(labels)) {}
  Matrix entries_;
  std::vector<std::string> labels_;
};

// Throws validation_error naming the first offending entry.
void validate_laplacian(const Matrix& entries, const Tolerances& tol = {});

GraphLaplacian from_adjacency(const AdjacencyMatrix& a, const Tolerances& tol = {});
AdjacencyMatrix to_adjacency(const GraphLaplacian& l, const Tolerances& tol = {});

// Divides by trace(L); rejects the zero-trace (empty network) input.
GraphLaplacian trace_normalize(const GraphLaplacian& l, const Tolerances& tol = {});

// Ordered collection of Laplacians over a shared node set, with optional
// per-observation covariates, display labels and group tags.
struct NetworkSample {
  std::vector<GraphLaplacian> observations;
  std::vector<Vector> covariates;       // empty, or one length-u vector per observation
  std::vector<std::string> labels;      // empty or one per observation
  std::vector<std::string> groups;      // empty or one per observation

  std::size_t size() const { return observations.size(); }
  Eigen::Index dim() const { return observations.empty() ? 0 : observations.front().dim(); }
  Eigen::Index covariate_dim() const { return covariates.empty() ? 0 : covariates.front().size(); }

  void add(GraphLaplacian l);
  void validate() const;  // shared m, consistent covariate lengths
  NetworkSample subset(const std::vector<std::size_t>& idx) const;
};

}  // namespace netman
