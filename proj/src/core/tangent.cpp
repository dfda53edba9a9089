#include "core/tangent.hpp"

namespace netman {

namespace {
void check_same_shape(const Matrix& x, const Matrix& nu, const char* who) {
  if (x.rows() != nu.rows() || x.cols() != nu.cols())
    throw validation_error(std::string(who) + ": dimension mismatch between point and pole");
}
}  // namespace

TangentVector to_tangent_euclidean(const EmbeddedPoint& x, const EmbeddedPoint& nu) {
  check_same_shape(x.matrix, nu.matrix, "to_tangent");
  if (x.alpha != nu.alpha)
    throw validation_error("to_tangent: point and pole use different powers");
  Matrix core = helmert_sandwich(x.matrix - nu.matrix);
  core = 0.5 * (core + core.transpose()).eval();  // scrub accumulated asymmetry
  return TangentVector{vech_star(core), TangentFlavor::euclidean, x.matrix.rows()};
}

Matrix from_tangent_euclidean(const TangentVector& q, const Matrix& nu) {
  if (q.flavor != TangentFlavor::euclidean)
    throw validation_error("from_tangent_euclidean: wrong tangent flavor");
  if (q.coords.size() != q.expected_len())
    throw validation_error("from_tangent_euclidean: coordinate length mismatch");
  if (nu.rows() != q.m || nu.cols() != q.m)
    throw validation_error("from_tangent_euclidean: pole dimension mismatch");
  return nu + helmert_unsandwich(vech_star_inv(q.coords));
}

TangentVector to_tangent_procrustes(const Matrix& x, const Matrix& nu) {
  check_same_shape(x, nu, "to_tangent");
  Matrix r = opa(nu, x);  // match x to the pole
  return TangentVector{vec(helmert_sandwich(x * r - nu)), TangentFlavor::procrustes, x.rows()};
}

Matrix from_tangent_procrustes(const TangentVector& q, const Matrix& nu) {
  if (q.flavor != TangentFlavor::procrustes)
    throw validation_error("from_tangent_procrustes: wrong tangent flavor");
  if (q.coords.size() != q.expected_len())
    throw validation_error("from_tangent_procrustes: coordinate length mismatch");
  if (nu.rows() != q.m || nu.cols() != q.m)
    throw validation_error("from_tangent_procrustes: pole dimension mismatch");
  Matrix p = nu + helmert_unsandwich(vec_inv(q.coords));
  Matrix r = opa(nu, p);  // re-align the reconstruction to the pole
  return p * r;
}

TangentVector to_tangent(const Matrix& x, const Matrix& nu, const AnalysisConfig& cfg) {
  if (cfg.is_procrustes()) return to_tangent_procrustes(x, nu);
  EmbeddedPoint xe{x, cfg.effective_alpha()};
  EmbeddedPoint ne{nu, cfg.effective_alpha()};
  return to_tangent_euclidean(xe, ne);
}

Matrix from_tangent(const TangentVector& q, const Matrix& nu, const AnalysisConfig& cfg) {
  return cfg.is_procrustes() ? from_tangent_procrustes(q, nu) : from_tangent_euclidean(q, nu);
}

}  // namespace netman
