#pragma once

#include "core/config.hpp"
#include "core/laplacian.hpp"

namespace netman {

// Nearest point of the graph-Laplacian polytope in Frobenius distance.
//
// The equality constraints (symmetry, zero row sums) are eliminated by
// parameterising L by its lower-triangle off-diagonal entries, which
// leaves a sign-constrained strictly convex QP; the diagonal of Y still
// couples the coordinates, so the program is solved iteratively
// (operator splitting with an exact structured linear solve) and then
// polished on the identified active set.
//
// Instances keep the previous solution as a warm start, which pays off
// for the dense projection sequences along interpolation and PC paths.
// An instance is not shareable mid-solve; use one per thread.
class ProjectionSolver {
public:
  explicit ProjectionSolver(Eigen::Index m, QPSettings settings = {}, Tolerances tol = {});

  GraphLaplacian project(const Matrix& y);

  // diagnostics of the last solve
  int last_iterations() const { return last_iterations_; }
  double last_primal_residual() const { return last_primal_; }
  double last_dual_residual() const { return last_dual_; }
  bool last_polished() const { return last_polished_; }

private:
  void solve_regularized(double c, const Vector& rhs, Vector& out) const;

  Eigen::Index m_;
  Eigen::Index n_pairs_;
  QPSettings settings_;
  Tolerances tol_;
  std::vector<Eigen::Index> pair_row_, pair_col_;
  Vector z_, u_;  // warm-start state
  int last_iterations_ = 0;
  double last_primal_ = 0.0, last_dual_ = 0.0;
  bool last_polished_ = false;
};

// One-shot convenience wrapper.
GraphLaplacian project_to_laplacian(const Matrix& y, const QPSettings& settings = {},
                                    const Tolerances& tol = {});

}  // namespace netman
