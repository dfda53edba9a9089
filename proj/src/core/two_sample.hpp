#pragma once

#include "core/means.hpp"

namespace netman {

enum class TestMethod { asymptotic, permutation };

struct TwoSampleResult {
  double statistic = 0.0;         // T = d(eta_A, eta_B)^2
  double scaled_statistic = 0.0;  // nA nB / (nA + nB) * T, the asymptotic test statistic
  double p_value = 1.0;
  TestMethod method = TestMethod::permutation;
  Metric metric = Metric::sqrt;
  double alpha = 0.5;
  std::uint64_t seed = 0;
  int r = 0;                      // permutation count
  Vector deltas;                  // asymptotic: estimated mixture weights
  std::vector<double> permuted;   // permutation: sorted replicate statistics
};

// Squared distance between the two group embedding means under the
// configured metric.
double two_sample_statistic(const NetworkSample& a, const NetworkSample& b,
                            const AnalysisConfig& cfg);

// Scaled statistic against its weighted chi-square null (per-coordinate
// variances, method of moments); euclidean-family metrics only.
TwoSampleResult asymptotic_test(const NetworkSample& a, const NetworkSample& b,
                                const AnalysisConfig& cfg);

// Random relabelling test; works for every metric.
TwoSampleResult permutation_test(const NetworkSample& a, const NetworkSample& b,
                                 const AnalysisConfig& cfg, int r);

// The p-value rule applied to an observed statistic and the (unsorted)
// permuted statistics; exposed for direct testing.
double permutation_p_value(double t, std::vector<double> permuted);

// Edge-level screen comparing per-pair adjacency weights between groups.
struct EdgeZParams {
  double beta = 0.2;     // slope of the mean/sd relationship
  double big_n = 200.0;  // weight scale: w_A = nA / N, w_B = nB / N
  bool q_is_median = true;
  double q_fixed = 0.0;  // used when q_is_median is false
};

struct EdgeZRow {
  Eigen::Index i = 0, j = 0;  // node indices, i < j
  double mean_a = 0.0, mean_b = 0.0;
  double s_p = 0.0;
  double z = 0.0;
};

struct EdgeZTable {
  std::vector<EdgeZRow> rows;  // sorted by |z|, descending
  std::size_t dropped = 0;     // pairs with an all-zero group
  double q = 0.0;
  std::vector<std::string> node_labels;
};

EdgeZTable edge_z_table(const NetworkSample& a, const NetworkSample& b, const EdgeZParams& params,
                        unsigned threads = 1);

}  // namespace netman
