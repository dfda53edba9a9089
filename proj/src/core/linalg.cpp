#include "core/linalg.hpp"

#include <cmath>
#include <limits>

namespace netman {

namespace {
inline double helmert_h(Eigen::Index j) {  // 1-based row index
  return -1.0 / std::sqrt(static_cast<double>(j) * static_cast<double>(j + 1));
}
}  // namespace

Matrix helmert(Eigen::Index m) {
  if (m < 2) throw validation_error("helmert: node count must be at least 2");
  Matrix h = Matrix::Zero(m - 1, m);
  for (Eigen::Index j = 1; j < m; ++j) {
    double hj = helmert_h(j);
    for (Eigen::Index i = 0; i < j; ++i) h(j - 1, i) = hj;
    h(j - 1, j) = -static_cast<double>(j) * hj;
  }
  return h;
}

Matrix helmert_left(const Matrix& x) {
  Eigen::Index m = x.rows();
  if (m < 2) throw validation_error("helmert_left: need at least 2 rows");
  Matrix out(m - 1, x.cols());
  Eigen::RowVectorXd prefix = Eigen::RowVectorXd::Zero(x.cols());
  for (Eigen::Index j = 1; j < m; ++j) {
    prefix += x.row(j - 1);
    double hj = helmert_h(j);
    out.row(j - 1) = hj * prefix - static_cast<double>(j) * hj * x.row(j);
  }
  return out;
}

Matrix helmert_right(const Matrix& x) {
  Eigen::Index m = x.cols();
  if (m < 2) throw validation_error("helmert_right: need at least 2 columns");
  Matrix out(x.rows(), m - 1);
  Vector prefix = Vector::Zero(x.rows());
  for (Eigen::Index j = 1; j < m; ++j) {
    prefix += x.col(j - 1);
    double hj = helmert_h(j);
    out.col(j - 1) = hj * prefix - static_cast<double>(j) * hj * x.col(j);
  }
  return out;
}

Matrix helmert_left_t(const Matrix& y) {
  Eigen::Index m = y.rows() + 1;
  Matrix out(m, y.cols());
  // (Ht y)_i = sum_{j >= i} h_j y_j  - (i-1) h_{i-1} y_{i-1}   (1-based i)
  Eigen::RowVectorXd suffix = Eigen::RowVectorXd::Zero(y.cols());
  for (Eigen::Index i = m; i >= 1; --i) {
    if (i <= m - 1) suffix += helmert_h(i) * y.row(i - 1);
    Eigen::RowVectorXd r = suffix;
    if (i >= 2) r -= static_cast<double>(i - 1) * helmert_h(i - 1) * y.row(i - 2);
    out.row(i - 1) = r;
  }
  return out;
}

Matrix helmert_right_t(const Matrix& y) {
  Eigen::Index m = y.cols() + 1;
  Matrix out(y.rows(), m);
  Vector suffix = Vector::Zero(y.rows());
  for (Eigen::Index i = m; i >= 1; --i) {
    if (i <= m - 1) suffix += helmert_h(i) * y.col(i - 1);
    Vector c = suffix;
    if (i >= 2) c -= static_cast<double>(i - 1) * helmert_h(i - 1) * y.col(i - 2);
    out.col(i - 1) = c;
  }
  return out;
}

Vector vech_star(const Matrix& s, double eps_sym) {
  if (s.rows() != s.cols()) throw validation_error("vech_star: matrix must be square");
  if (max_asymmetry(s) > eps_sym) throw validation_error("vech_star: matrix must be symmetric");
  const double root2 = std::sqrt(2.0);
  Eigen::Index d = s.rows();
  Vector q(vech_len(d));
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = j; i < d; ++i) q(k++) = (i == j) ? s(i, j) : root2 * s(i, j);
  return q;
}

Matrix vech_star_inv(const Vector& q) {
  // solve d(d+1)/2 = len for d
  Eigen::Index len = q.size();
  Eigen::Index d = static_cast<Eigen::Index>((std::sqrt(8.0 * static_cast<double>(len) + 1.0) - 1.0) / 2.0 + 0.5);
  if (vech_len(d) != len) throw validation_error("vech_star_inv: length is not a triangular number");
  const double inv_root2 = 1.0 / std::sqrt(2.0);
  Matrix s(d, d);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j; i < d; ++i) {
      double v = q(k++);
      if (i == j) {
        s(i, j) = v;
      } else {
        s(i, j) = v * inv_root2;
        s(j, i) = s(i, j);
      }
    }
  }
  return s;
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix vec_inv(const Vector& q) {
  Eigen::Index d = static_cast<Eigen::Index>(std::sqrt(static_cast<double>(q.size())) + 0.5);
  if (d * d != q.size()) throw validation_error("vec_inv: length is not a perfect square");
  return Eigen::Map<const Matrix>(q.data(), d, d);
}

double max_asymmetry(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = j + 1; i < a.rows(); ++i)
      worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
  return worst;
}

}  // namespace netman
