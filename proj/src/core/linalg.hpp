#pragma once

#include <Eigen/Dense>

#include "core/common.hpp"

namespace netman {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Helmert sub-matrix of size (m-1) x m. Row j (1-based) is
// (h_j, ..., h_j, -j*h_j, 0, ..., 0) with h_j = -(j(j+1))^{-1/2}.
// Rows are orthonormal, H Ht = I_{m-1}, Ht H = C_m (centering matrix).
Matrix helmert(Eigen::Index m);

// Structured applications of H in O(m^2) via prefix/suffix sums, so the
// m=1000 regime never forms or multiplies the dense (m-1) x m matrix.
Matrix helmert_left(const Matrix& x);         // H * x,   x is m x c
Matrix helmert_right(const Matrix& x);        // x * Ht,  x is r x m
Matrix helmert_left_t(const Matrix& y);       // Ht * y,  y is (m-1) x c
Matrix helmert_right_t(const Matrix& y);      // y * H,   y is r x (m-1)

inline Matrix helmert_sandwich(const Matrix& x) { return helmert_left(helmert_right(x)); }        // H x Ht
inline Matrix helmert_unsandwich(const Matrix& y) { return helmert_left_t(helmert_right_t(y)); }  // Ht y H

// Half-vectorisation of a symmetric matrix with sqrt(2) weights on the
// off-diagonal entries; an isometry onto R^{d(d+1)/2}. Ordering is
// column-major over the lower triangle including the diagonal; the order
// is part of the on-disk contract and must not change.
Vector vech_star(const Matrix& s, double eps_sym = 1e-10);
Matrix vech_star_inv(const Vector& q);

// Column-stacking vectorisation of a square matrix and its inverse.
Vector vec(const Matrix& m);
Matrix vec_inv(const Vector& q);

// Dimension helpers
inline Eigen::Index vech_len(Eigen::Index d) { return d * (d + 1) / 2; }  // d = m - 1

// Largest absolute asymmetry |a_ij - a_ji|.
double max_asymmetry(const Matrix& a);

}  // namespace netman
