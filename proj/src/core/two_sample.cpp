#include "core/two_sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "core/stats_util.hpp"

namespace netman {

namespace {

void check_groups(const NetworkSample& a, const NetworkSample& b) {
  if (a.size() == 0 || b.size() == 0) throw validation_error("two-sample: empty group");
  a.validate();
  b.validate();
  if (a.dim() != b.dim()) throw validation_error("two-sample: groups disagree on node count");
}

Matrix subset_mean(const std::vector<Matrix>& points, const std::vector<std::size_t>& idx) {
  Matrix acc = Matrix::Zero(points.front().rows(), points.front().cols());
  for (std::size_t k : idx) acc += points[k];
  return acc / static_cast<double>(idx.size());
}

// d(eta_A*, eta_B*)^2 for a relabelling of the pooled, pre-embedded sample
double relabelled_statistic(const std::vector<Matrix>& pool, const std::vector<std::size_t>& idx_a,
                            const std::vector<std::size_t>& idx_b, const AnalysisConfig& cfg) {
  if (cfg.is_procrustes()) {
    std::vector<Matrix> ga, gb;
    ga.reserve(idx_a.size());
    gb.reserve(idx_b.size());
    for (std::size_t k : idx_a) ga.push_back(pool[k]);
    for (std::size_t k : idx_b) gb.push_back(pool[k]);
    Matrix ea = gpa_mean(ga, 1);
    Matrix eb = gpa_mean(gb, 1);
    double d = procrustes_matrix_distance(ea, eb);
    return d * d;
  }
  Matrix ea = subset_mean(pool, idx_a);
  Matrix eb = subset_mean(pool, idx_b);
  double d = frobenius_distance(ea, eb);
  return d * d;
}

// chart every embedding at the zero pole; rows are observations
Matrix coordinates(const std::vector<Matrix>& points, double alpha) {
  Eigen::Index m = points.front().rows();
  Matrix w(static_cast<Eigen::Index>(points.size()), m * (m - 1) / 2);
  EmbeddedPoint zero{Matrix::Zero(m, m), alpha};
  for (std::size_t k = 0; k < points.size(); ++k)
    w.row(static_cast<Eigen::Index>(k)) =
        to_tangent_euclidean(EmbeddedPoint{points[k], alpha}, zero).coords.transpose();
  return w;
}

std::vector<std::size_t> iota_indices(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

}  // namespace

double two_sample_statistic(const NetworkSample& a, const NetworkSample& b,
                            const AnalysisConfig& cfg) {
  check_groups(a, b);
  EmbeddedSample ea = embed_sample(a, cfg);
  EmbeddedSample eb = embed_sample(b, cfg);
  double d = cfg.is_procrustes() ? procrustes_matrix_distance(ea.eta_hat, eb.eta_hat)
                                 : frobenius_distance(ea.eta_hat, eb.eta_hat);
  return d * d;
}

TwoSampleResult asymptotic_test(const NetworkSample& a, const NetworkSample& b,
                                const AnalysisConfig& cfg) {
  check_groups(a, b);
  if (cfg.is_procrustes())
    throw validation_error(
        "two-sample: the weighted chi-square null is available for the euclidean-family "
        "metrics only; use the permutation method for procrustes");
  const auto n_a = static_cast<double>(a.size());
  const auto n_b = static_cast<double>(b.size());
  if (a.size() < 2 || b.size() < 2)
    throw validation_error("two-sample: variance estimation needs at least 2 observations per group");

  EmbeddedSample ea = embed_sample(a, cfg);
  EmbeddedSample eb = embed_sample(b, cfg);
  double alpha = cfg.effective_alpha();
  Matrix wa = coordinates(ea.points, alpha);
  Matrix wb = coordinates(eb.points, alpha);

  Vector mean_a = wa.colwise().mean().transpose();
  Vector mean_b = wb.colwise().mean().transpose();
  double t = (mean_a - mean_b).squaredNorm();

  // method-of-moments per-coordinate variances (divisor n)
  Vector var_a = (wa.rowwise() - mean_a.transpose()).colwise().squaredNorm().transpose() / n_a;
  Vector var_b = (wb.rowwise() - mean_b.transpose()).colwise().squaredNorm().transpose() / n_b;
  Vector deltas = (n_b * var_a + n_a * var_b) / (n_a + n_b);

  TwoSampleResult out;
  out.statistic = t;
  out.scaled_statistic = (n_a * n_b / (n_a + n_b)) * t;
  out.method = TestMethod::asymptotic;
  out.metric = cfg.metric;
  out.alpha = alpha;
  out.seed = cfg.seed;
  out.deltas = deltas;
  out.p_value = weighted_chi2_tail(deltas, out.scaled_statistic, cfg.seed, cfg.mc_draws,
                                   cfg.threads);
  return out;
}

double permutation_p_value(double t, std::vector<double> permuted) {
  if (permuted.empty()) throw validation_error("permutation: need at least one replicate");
  std::sort(permuted.begin(), permuted.end());
  const int r = static_cast<int>(permuted.size());
  if (t <= permuted.front()) return 1.0;
  if (t > permuted.back()) return 0.0;
  for (int j = 1; j <= r - 1; ++j) {
    if (permuted[j - 1] < t && t <= permuted[j])
      return 1.0 - static_cast<double>(j) / static_cast<double>(r);
  }
  // unreachable: the boundary cases above cover the sorted sequence
  throw numerical_error("permutation: p-value rule failed to locate the statistic");
}

TwoSampleResult permutation_test(const NetworkSample& a, const NetworkSample& b,
                                 const AnalysisConfig& cfg, int r) {
  check_groups(a, b);
  if (r < 1) throw validation_error("permutation: need r >= 1 replicates");

  double alpha = cfg.effective_alpha();
  std::vector<Matrix> pool(a.size() + b.size());
  parallel_for(pool.size(), cfg.threads, [&](std::size_t k) {
    const GraphLaplacian& l =
        k < a.size() ? a.observations[k] : b.observations[k - a.size()];
    pool[k] = f_alpha(l, alpha, cfg.tol).matrix;
  });

  double t = relabelled_statistic(pool, iota_indices(0, a.size()),
                                  iota_indices(a.size(), pool.size()), cfg);

  std::vector<double> permuted(static_cast<std::size_t>(r));
  parallel_for(permuted.size(), cfg.threads, [&](std::size_t rep) {
    std::mt19937_64 rng(substream_seed(cfg.seed, rep));
    std::vector<std::size_t> order = iota_indices(0, pool.size());
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> idx_a(order.begin(), order.begin() + static_cast<long>(a.size()));
    std::vector<std::size_t> idx_b(order.begin() + static_cast<long>(a.size()), order.end());
    permuted[rep] = relabelled_statistic(pool, idx_a, idx_b, cfg);
  });

  TwoSampleResult out;
  out.statistic = t;
  out.scaled_statistic =
      (static_cast<double>(a.size()) * static_cast<double>(b.size()) /
       static_cast<double>(pool.size())) * t;
  out.method = TestMethod::permutation;
  out.metric = cfg.metric;
  out.alpha = alpha;
  out.seed = cfg.seed;
  out.r = r;
  out.p_value = permutation_p_value(t, permuted);
  std::sort(permuted.begin(), permuted.end());
  out.permuted = std::move(permuted);
  return out;
}

EdgeZTable edge_z_table(const NetworkSample& a, const NetworkSample& b, const EdgeZParams& params,
                        unsigned threads) {
  check_groups(a, b);
  const Eigen::Index m = a.dim();
  const double n_a = static_cast<double>(a.size());
  const double n_b = static_cast<double>(b.size());
  const double w_a = n_a / params.big_n;
  const double w_b = n_b / params.big_n;

  // adjacency values from trace-normalized observations
  std::vector<Matrix> na(a.size()), nb(b.size());
  parallel_for(a.size() + b.size(), threads, [&](std::size_t k) {
    if (k < a.size())
      na[k] = trace_normalize(a.observations[k]).entries();
    else
      nb[k - a.size()] = trace_normalize(b.observations[k - a.size()]).entries();
  });

  const Eigen::Index n_pairs = m * (m - 1) / 2;
  std::vector<EdgeZRow> slots(static_cast<std::size_t>(n_pairs));
  std::vector<char> keep(static_cast<std::size_t>(n_pairs), 0);
  parallel_for(static_cast<std::size_t>(n_pairs), threads, [&](std::size_t k) {
    // unrank the pair index (column-major lower triangle)
    Eigen::Index kk = static_cast<Eigen::Index>(k);
    Eigen::Index j = 0;
    Eigen::Index block = m - 1;
    while (kk >= block) {
      kk -= block;
      --block;
      ++j;
    }
    Eigen::Index i = j + 1 + kk;

    constexpr double kZero = 1e-15;
    double sum_x = 0.0, sum_x2 = 0.0;
    bool any_x = false;
    for (const auto& l : na) {
      double v = -l(i, j);
      if (std::abs(v) > kZero) any_x = true;
      sum_x += v;
      sum_x2 += v * v;
    }
    double sum_y = 0.0, sum_y2 = 0.0;
    bool any_y = false;
    for (const auto& l : nb) {
      double v = -l(i, j);
      if (std::abs(v) > kZero) any_y = true;
      sum_y += v;
      sum_y2 += v * v;
    }
    if (!any_x || !any_y) return;  // drop pairs unused by one group

    double mean_x = sum_x / n_a;
    double mean_y = sum_y / n_b;
    double var_x = sum_x2 / n_a - mean_x * mean_x;
    double var_y = sum_y2 / n_b - mean_y * mean_y;
    if (var_x < 0.0) var_x = 0.0;
    if (var_y < 0.0) var_y = 0.0;
    double beta2 = params.beta * params.beta;
    double sp2 = (n_a * (w_a * var_x + (1.0 - w_a) * beta2 * mean_x * mean_x) +
                  n_b * (w_b * var_y + (1.0 - w_b) * beta2 * mean_y * mean_y)) /
                 (n_a + n_b - 2.0);
    EdgeZRow row;
    row.i = i;
    row.j = j;
    row.mean_a = mean_x;
    row.mean_b = mean_y;
    row.s_p = std::sqrt(sp2 > 0.0 ? sp2 : 0.0);
    slots[k] = row;
    keep[k] = 1;
  });

  EdgeZTable out;
  out.rows.reserve(static_cast<std::size_t>(n_pairs));
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (keep[k]) out.rows.push_back(slots[k]);
  out.dropped = static_cast<std::size_t>(n_pairs) - out.rows.size();

  if (params.q_is_median) {
    if (out.rows.empty()) {
      out.q = 0.0;
    } else {
      std::vector<double> sp;
      sp.reserve(out.rows.size());
      for (const auto& r : out.rows) sp.push_back(r.s_p);
      std::sort(sp.begin(), sp.end());
      std::size_t h = sp.size() / 2;
      out.q = sp.size() % 2 == 1 ? sp[h] : 0.5 * (sp[h - 1] + sp[h]);
    }
  } else {
    out.q = params.q_fixed;
  }

  double se_scale = std::sqrt(1.0 / n_a + 1.0 / n_b);
  for (auto& row : out.rows) {
    double denom = (out.q + row.s_p) * se_scale;
    if (denom == 0.0) {
      if (row.mean_a == row.mean_b)
        row.z = 0.0;
      else
        throw numerical_error("edge screen: zero pooled scale with unequal means");
    } else {
      row.z = (row.mean_a - row.mean_b) / denom;
    }
  }

  std::sort(out.rows.begin(), out.rows.end(), [](const EdgeZRow& x, const EdgeZRow& y) {
    double ax = std::abs(x.z), ay = std::abs(y.z);
    if (ax != ay) return ax > ay;
    if (x.j != y.j) return x.j < y.j;
    return x.i < y.i;
  });

  out.node_labels = a.observations.front().node_labels();
  return out;
}

}  // namespace netman
