#pragma once

#include <cstdint>

#include "core/linalg.hpp"

namespace netman {

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi2_sf(double x, double df);
double chi2_cdf(double x, double df);
double chi2_quantile(double p, double df);

// P(sum_i deltas_i Z_i^2 >= t) for independent standard normals, by Monte
// Carlo with `draws` samples. Block-wise RNG substreams make the answer a
// deterministic function of (deltas, t, seed, draws) for any thread count.
double weighted_chi2_tail(const Vector& deltas, double t, std::uint64_t seed, int draws,
                          unsigned threads);

}  // namespace netman
