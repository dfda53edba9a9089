#include "core/projection.hpp"

#include <cmath>

namespace netman {

namespace {

// B maps pair variables to per-node sums: (B x)_i = sum of x over pairs
// containing node i. Bt v duplicates node values onto pairs.
void apply_b(const std::vector<Eigen::Index>& rows, const std::vector<Eigen::Index>& cols,
             const Vector& x, Vector& out) {
  out.setZero();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out(rows[k]) += x(k);
    out(cols[k]) += x(k);
  }
}

void apply_bt(const std::vector<Eigen::Index>& rows, const std::vector<Eigen::Index>& cols,
              const Vector& v, Vector& out) {
  for (std::size_t k = 0; k < rows.size(); ++k) out(k) = v(rows[k]) + v(cols[k]);
}

}  // namespace

ProjectionSolver::ProjectionSolver(Eigen::Index m, QPSettings settings, Tolerances tol)
    : m_(m), n_pairs_(m * (m - 1) / 2), settings_(settings), tol_(tol) {
  if (m < 2) throw validation_error("projection: node count must be at least 2");
  settings_.validate();
  pair_row_.reserve(n_pairs_);
  pair_col_.reserve(n_pairs_);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = j + 1; i < m; ++i) {
      pair_row_.push_back(i);
      pair_col_.push_back(j);
    }
  z_ = Vector::Zero(n_pairs_);
  u_ = Vector::Zero(n_pairs_);
}

// Solves ((c) I + 2 Bt B) x = rhs exactly. B Bt = (m-2) I + 1 1t, so the
// Woodbury identity reduces the solve to rank-one arithmetic.
void ProjectionSolver::solve_regularized(double c, const Vector& rhs, Vector& out) const {
  Vector g(m_);
  apply_b(pair_row_, pair_col_, rhs, g);
  double a = 0.5 * c + static_cast<double>(m_ - 2);
  // w = ((c/2) I + B Bt)^{-1} g = (a I + 1 1t)^{-1} g
  double shift = g.sum() / (a + static_cast<double>(m_));
  Vector w = (g.array() - shift).matrix() / a;
  Vector btw(n_pairs_);
  apply_bt(pair_row_, pair_col_, w, btw);
  out = (rhs - btw) / c;
}

GraphLaplacian ProjectionSolver::project(const Matrix& y) {
  if (y.rows() != m_ || y.cols() != m_)
    throw validation_error("projection: input dimension mismatch");
  if (max_asymmetry(y) > tol_.eps_sym)
    throw validation_error("projection: input must be symmetric");

  // objective in pair coordinates: 2|x - y_off|^2 + |B x + y_diag|^2
  Vector y_off(n_pairs_);
  for (Eigen::Index k = 0; k < n_pairs_; ++k) {
    Eigen::Index i = pair_row_[k], j = pair_col_[k];
    y_off(k) = 0.5 * (y(i, j) + y(j, i));
  }
  Vector y_diag = y.diagonal();

  Vector bt_ydiag(n_pairs_);
  apply_bt(pair_row_, pair_col_, y_diag, bt_ydiag);
  Vector rhs_base = 4.0 * y_off - 2.0 * bt_ydiag;

  double rho = settings_.rho > 0.0 ? settings_.rho : 4.0 * std::sqrt(static_cast<double>(m_));
  double scale_u = 1.0;  // u_ stores the scaled dual; rescaled when rho changes

  Vector x(n_pairs_), z_old(n_pairs_), tmp(n_pairs_);
  double sqrt_n = std::sqrt(static_cast<double>(n_pairs_));
  bool converged = false;
  int it = 0;
  for (; it < settings_.max_iterations; ++it) {
    tmp = rhs_base + rho * (z_ - u_);
    solve_regularized(4.0 + rho, tmp, x);
    z_old = z_;
    z_ = (x + u_).cwiseMin(0.0);
    u_ += x - z_;

    double r_primal = (x - z_).norm();
    double r_dual = rho * (z_ - z_old).norm();
    last_primal_ = r_primal;
    last_dual_ = r_dual;
    double eps_pri = sqrt_n * settings_.eps_primal +
                     settings_.eps_primal * std::max(x.norm(), z_.norm());
    double eps_dua = sqrt_n * settings_.eps_dual + settings_.eps_dual * rho * u_.norm();
    if (r_primal <= eps_pri && r_dual <= eps_dua) {
      converged = true;
      ++it;
      break;
    }
    // residual balancing
    if (r_primal > settings_.rho_balance * r_dual) {
      rho *= settings_.rho_scale_up;
      u_ /= settings_.rho_scale_up;
      scale_u *= settings_.rho_scale_up;
    } else if (r_dual > settings_.rho_balance * r_primal) {
      rho /= settings_.rho_scale_up;
      u_ *= settings_.rho_scale_up;
      scale_u /= settings_.rho_scale_up;
    }
  }
  (void)scale_u;
  last_iterations_ = it;

  if (!converged)
    throw numerical_error("projection: no convergence in " +
                          std::to_string(settings_.max_iterations) +
                          " iterations (primal " + std::to_string(last_primal_) + ", dual " +
                          std::to_string(last_dual_) + ")");

  // Polish: exact solve on the free set identified by the splitting, then
  // a KKT check. Falls back to the feasible splitting iterate on failure.
  Vector solution = z_;
  last_polished_ = false;
  {
    std::vector<bool> active(n_pairs_);
    for (Eigen::Index k = 0; k < n_pairs_; ++k) active[k] = (x(k) + u_(k)) >= 0.0;

    // conjugate gradient on (4 I_F + 2 B_Ft B_F) x_F = (rhs_base)_F
    Vector xf = Vector::Zero(n_pairs_);
    for (Eigen::Index k = 0; k < n_pairs_; ++k)
      if (!active[k]) xf(k) = solution(k);
    auto mask = [&](Vector& v) {
      for (Eigen::Index k = 0; k < n_pairs_; ++k)
        if (active[k]) v(k) = 0.0;
    };
    Vector bv(m_), hv(n_pairs_);
    auto apply_h = [&](const Vector& v, Vector& out) {
      Vector vm = v;
      mask(vm);
      apply_b(pair_row_, pair_col_, vm, bv);
      apply_bt(pair_row_, pair_col_, bv, out);
      out = 4.0 * vm + 2.0 * out;
      mask(out);
    };
    Vector b = rhs_base;
    mask(b);
    Vector r(n_pairs_), p(n_pairs_), hp(n_pairs_);
    apply_h(xf, hv);
    r = b - hv;
    p = r;
    double rr = r.squaredNorm();
    double b_norm = b.norm();
    int cg_limit = static_cast<int>(n_pairs_) + 10;
    for (int cg = 0; cg < cg_limit && std::sqrt(rr) > 1e-13 * (1.0 + b_norm); ++cg) {
      apply_h(p, hp);
      double denom = p.dot(hp);
      if (denom <= 0.0) break;
      double step = rr / denom;
      xf += step * p;
      double rr_new;
      r -= step * hp;
      rr_new = r.squaredNorm();
      p = r + (rr_new / rr) * p;
      rr = rr_new;
    }
    mask(xf);

    // feasibility of free coordinates and sign of active multipliers
    bool ok = true;
    for (Eigen::Index k = 0; k < n_pairs_ && ok; ++k)
      if (!active[k] && xf(k) > tol_.eps_feas) ok = false;
    if (ok) {
      apply_b(pair_row_, pair_col_, xf, bv);
      Vector grad(n_pairs_);
      apply_bt(pair_row_, pair_col_, bv + y_diag, grad);
      grad = 4.0 * (xf - y_off) + 2.0 * grad;
      for (Eigen::Index k = 0; k < n_pairs_ && ok; ++k) {
        if (active[k] && grad(k) > tol_.eps_feas) ok = false;
      }
      if (ok) {
        solution = xf.cwiseMin(0.0);
        last_polished_ = true;
      }
    }
  }

  Matrix l = Matrix::Zero(m_, m_);
  for (Eigen::Index k = 0; k < n_pairs_; ++k) {
    Eigen::Index i = pair_row_[k], j = pair_col_[k];
    l(i, j) = solution(k);
    l(j, i) = solution(k);
  }
  for (Eigen::Index i = 0; i < m_; ++i) l(i, i) = -l.row(i).sum();
  return GraphLaplacian::make(std::move(l), {}, tol_);
}

GraphLaplacian project_to_laplacian(const Matrix& y, const QPSettings& settings,
                                    const Tolerances& tol) {
  ProjectionSolver solver(y.rows(), settings, tol);
  return solver.project(y);
}

}  // namespace netman
