#pragma once

#include "core/config.hpp"
#include "core/metrics.hpp"

namespace netman {

enum class TangentFlavor {
  euclidean,   // vech* coordinates, length m(m-1)/2
  procrustes,  // vec coordinates, length (m-1)^2
};

struct TangentVector {
  Vector coords;
  TangentFlavor flavor = TangentFlavor::euclidean;
  Eigen::Index m = 0;  // node count of the underlying networks

  Eigen::Index expected_len() const {
    return flavor == TangentFlavor::euclidean ? m * (m - 1) / 2 : (m - 1) * (m - 1);
  }
};

// Euclidean pair: a global affine isometry between the embedding space
// and R^{m(m-1)/2}.
TangentVector to_tangent_euclidean(const EmbeddedPoint& x, const EmbeddedPoint& nu);
Matrix from_tangent_euclidean(const TangentVector& q, const Matrix& nu);

// Procrustes pair: aligns x to the pole before charting; the return trip
// re-aligns the reconstruction, so the pair is inverse only up to the
// metric's orthogonal invariance.
TangentVector to_tangent_procrustes(const Matrix& x, const Matrix& nu);
Matrix from_tangent_procrustes(const TangentVector& q, const Matrix& nu);

// Dispatch on the configured metric. `x` and `nu` live in the embedding.
TangentVector to_tangent(const Matrix& x, const Matrix& nu, const AnalysisConfig& cfg);
Matrix from_tangent(const TangentVector& q, const Matrix& nu, const AnalysisConfig& cfg);

}  // namespace netman
