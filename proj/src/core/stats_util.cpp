#include "core/stats_util.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <random>

namespace netman {

double chi2_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, x));
}

double chi2_cdf(double x, double df) {
  if (x <= 0.0) return 0.0;
  boost::math::chi_squared dist(df);
  return boost::math::cdf(dist, x);
}

double chi2_quantile(double p, double df) {
  if (!(p >= 0.0 && p < 1.0)) throw validation_error("chi2_quantile: p must lie in [0, 1)");
  boost::math::chi_squared dist(df);
  return boost::math::quantile(dist, p);
}

double weighted_chi2_tail(const Vector& deltas, double t, std::uint64_t seed, int draws,
                          unsigned threads) {
  if (deltas.size() == 0) throw validation_error("weighted_chi2_tail: no mixture weights");
  if (draws < 1) throw validation_error("weighted_chi2_tail: need at least one draw");
  constexpr int kBlock = 4096;
  int n_blocks = (draws + kBlock - 1) / kBlock;
  std::vector<long> hits(n_blocks, 0);
  parallel_for(static_cast<std::size_t>(n_blocks), threads, [&](std::size_t b) {
    std::mt19937_64 rng(substream_seed(seed, b));
    std::normal_distribution<double> normal(0.0, 1.0);
    int lo = static_cast<int>(b) * kBlock;
    int hi = std::min(lo + kBlock, draws);
    long count = 0;
    for (int i = lo; i < hi; ++i) {
      double acc = 0.0;
      for (Eigen::Index j = 0; j < deltas.size(); ++j) {
        double z = normal(rng);
        acc += deltas(j) * z * z;
      }
      if (acc >= t) ++count;
    }
    hits[b] = count;
  });
  long total = 0;
  for (long h : hits) total += h;
  return static_cast<double>(total) / static_cast<double>(draws);
}

}  // namespace netman
