#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace netman {

// Error categories. The C API and the CLI map these onto exit codes:
// validation/io problems -> 1, numerical failures -> 2.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class validation_error : public error {
public:
  using error::error;
};

class io_error : public error {
public:
  using error::error;
};

class numerical_error : public error {
public:
  using error::error;
};

// Tolerances for membership in the graph-Laplacian polytope and for
// symmetry checks. eps_psd scales with trace so the check is unit-free.
struct Tolerances {
  double eps_sym = 1e-10;
  double eps_feas = 1e-8;
  double eps_psd_scale = 1e-8;  // eps_psd = eps_psd_scale * trace(L)

  double eps_psd(double trace) const { return eps_psd_scale * (trace > 1.0 ? trace : 1.0); }
};

// Chunked parallel map over [0, n). Output slots must be independent per
// index; combination order is the caller's responsibility, which keeps
// results identical for any thread count.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (threads == 0) threads = hw ? hw : 1;
  if (threads > n) threads = static_cast<unsigned>(n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Deterministic per-replicate stream: parallel and serial runs agree
// because each replicate owns seed ^ f(index).
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step on the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace netman
