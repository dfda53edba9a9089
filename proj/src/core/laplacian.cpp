#include "core/laplacian.hpp"

#include <cmath>
#include <sstream>

namespace netman {

namespace {
std::string at(Eigen::Index i, Eigen::Index j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}
}  // namespace

void AdjacencyMatrix::validate(const Tolerances& tol) const {
  const Matrix& w = weights;
  if (w.rows() != w.cols()) throw validation_error("adjacency: matrix must be square");
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      if (i == j) {
        if (std::abs(w(i, i)) > tol.eps_feas)
          throw validation_error("adjacency: nonzero diagonal at " + at(i, i));
      } else {
        if (w(i, j) < -tol.eps_feas)
          throw validation_error("adjacency: negative weight at " + at(i, j));
        if (i > j && std::abs(w(i, j) - w(j, i)) > tol.eps_sym)
          throw validation_error("adjacency: asymmetric at " + at(i, j));
      }
    }
  }
  if (!node_labels.empty() && static_cast<Eigen::Index>(node_labels.size()) != w.rows())
    throw validation_error("adjacency: label count does not match dimension");
}

void validate_laplacian(const Matrix& entries, const Tolerances& tol) {
  if (entries.rows() != entries.cols()) throw validation_error("laplacian: matrix must be square");
  Eigen::Index m = entries.rows();
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = j + 1; i < m; ++i)
      if (std::abs(entries(i, j) - entries(j, i)) > tol.eps_sym)
        throw validation_error("laplacian: asymmetric at " + at(i, j));
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < m; ++i)
      if (i != j && entries(i, j) > tol.eps_feas)
        throw validation_error("laplacian: positive off-diagonal at " + at(i, j));
  for (Eigen::Index i = 0; i < m; ++i) {
    double rs = entries.row(i).sum();
    if (std::abs(rs) > tol.eps_feas)
      throw validation_error("laplacian: row " + std::to_string(i) + " sums to " + std::to_string(rs));
  }
}

GraphLaplacian GraphLaplacian::make(Matrix entries, std::vector<std::string> node_labels,
                                    const Tolerances& tol) {
  validate_laplacian(entries, tol);
  if (!node_labels.empty() && static_cast<Eigen::Index>(node_labels.size()) != entries.rows())
    throw validation_error("laplacian: label count does not match dimension");
  return GraphLaplacian(std::move(entries), std::move(node_labels));
}

void GraphLaplacian::set_node_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != dim())
    throw validation_error("laplacian: label count does not match dimension");
  labels_ = std::move(labels);
}

GraphLaplacian from_adjacency(const AdjacencyMatrix& a, const Tolerances& tol) {
  a.validate(tol);
  // symmetrize away validation-tolerance residue so L = D - A is exact
  Matrix w = 0.5 * (a.weights + a.weights.transpose());
  Matrix l = -w;
  for (Eigen::Index i = 0; i < l.rows(); ++i) l(i, i) = w.row(i).sum() - w(i, i);
  return GraphLaplacian::make(std::move(l), a.node_labels, tol);
}

AdjacencyMatrix to_adjacency(const GraphLaplacian& l, const Tolerances& tol) {
  (void)tol;
  Matrix w = -l.entries();
  for (Eigen::Index i = 0; i < w.rows(); ++i) w(i, i) = 0.0;
  w = w.cwiseMax(0.0);  // clamp tolerance-level positives
  return AdjacencyMatrix{std::move(w), l.node_labels()};
}

GraphLaplacian trace_normalize(const GraphLaplacian& l, const Tolerances& tol) {
  double tr = l.trace();
  if (!(tr > 0.0))
    throw validation_error("trace_normalize: degenerate input, trace is " + std::to_string(tr));
  return GraphLaplacian::make(l.entries() / tr, l.node_labels(), tol);
}

void NetworkSample::add(GraphLaplacian l) { observations.push_back(std::move(l)); }

void NetworkSample::validate() const {
  if (observations.empty()) return;
  Eigen::Index m = observations.front().dim();
  for (const auto& l : observations)
    if (l.dim() != m) throw validation_error("sample: observations disagree on node count");
  if (!covariates.empty()) {
    if (covariates.size() != observations.size())
      throw validation_error("sample: covariate count does not match observation count");
    Eigen::Index u = covariates.front().size();
    for (const auto& t : covariates)
      if (t.size() != u) throw validation_error("sample: covariate vectors disagree on length");
  }
  if (!labels.empty() && labels.size() != observations.size())
    throw validation_error("sample: label count does not match observation count");
  if (!groups.empty() && groups.size() != observations.size())
    throw validation_error("sample: group count does not match observation count");
}

NetworkSample NetworkSample::subset(const std::vector<std::size_t>& idx) const {
  NetworkSample out;
  for (std::size_t k : idx) {
    if (k >= observations.size()) throw validation_error("sample: subset index out of range");
    out.observations.push_back(observations[k]);
    if (!covariates.empty()) out.covariates.push_back(covariates[k]);
    if (!labels.empty()) out.labels.push_back(labels[k]);
    if (!groups.empty()) out.groups.push_back(groups[k]);
  }
  return out;
}

}  // namespace netman
