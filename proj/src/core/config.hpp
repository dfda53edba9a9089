#pragma once

#include <cstdint>
#include <string>

#include "core/common.hpp"

namespace netman {

enum class Metric {
  euclidean,   // d_1, alpha = 1
  sqrt,        // d_{1/2}, alpha = 1/2
  procrustes,  // d_{1/2,S}, alpha = 1/2 with orthogonal matching
};

// The four reverse power maps G_alpha.
enum class ReverseMap {
  odd_integer_power,      // Q^{1/alpha}, 1/alpha an odd integer
  nearest_psd_then_power, // PSD part of the symmetrised Q, then ^{1/alpha}
  right_gram,             // (Q Qt)^{1/(2 alpha)}  (drops a right orthogonal factor)
  left_gram,              // (Qt Q)^{1/(2 alpha)}  (keeps it, conjugated)
};

struct QPSettings {
  int max_iterations = 20000;
  double eps_primal = 1e-8;
  double eps_dual = 1e-8;
  // residual-balancing penalty schedule
  double rho = 0.0;          // 0 -> auto (scaled with sqrt(m))
  double rho_scale_up = 2.0;
  double rho_balance = 10.0;

  void validate() const {
    if (max_iterations < 1) throw validation_error("qp: max_iterations must be positive");
    if (!(eps_primal > 0.0) || !(eps_dual > 0.0))
      throw validation_error("qp: tolerances must be positive");
  }
};

struct AnalysisConfig {
  Metric metric = Metric::sqrt;
  double alpha = 0.5;
  bool alpha_overridden = false;
  ReverseMap reverse_map = ReverseMap::nearest_psd_then_power;
  bool reverse_map_overridden = false;
  QPSettings qp;
  Tolerances tol;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  int mc_draws = 100000;  // weighted chi-square mixture sampling

  bool is_procrustes() const { return metric == Metric::procrustes; }

  double effective_alpha() const {
    if (alpha_overridden) return alpha;
    return metric == Metric::euclidean ? 1.0 : 0.5;
  }

  ReverseMap effective_reverse_map() const {
    if (reverse_map_overridden) return reverse_map;
    switch (metric) {
      case Metric::euclidean: return ReverseMap::odd_integer_power;
      case Metric::sqrt: return ReverseMap::nearest_psd_then_power;
      case Metric::procrustes: return ReverseMap::left_gram;
    }
    return ReverseMap::nearest_psd_then_power;
  }
};

std::string to_string(Metric m);
std::string to_string(ReverseMap g);
Metric metric_from_string(const std::string& s);

}  // namespace netman
