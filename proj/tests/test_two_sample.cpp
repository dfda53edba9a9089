#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/stats_util.hpp"
#include "core/two_sample.hpp"
#include "test_util.hpp"

using namespace netman;
namespace tu = netman::testutil;

namespace {
NetworkSample random_sample(Eigen::Index m, int n, std::mt19937_64& gen) {
  NetworkSample s;
  for (int k = 0; k < n; ++k) s.add(tu::random_laplacian(m, gen));
  return s;
}
}  // namespace

TEST_CASE("statistic: identical groups give zero; hand computation at alpha=1") {
  auto gen = tu::rng(101);
  NetworkSample a = random_sample(4, 3, gen);
  AnalysisConfig cfg;
  CHECK(two_sample_statistic(a, a, cfg) == doctest::Approx(0.0).epsilon(1e-12));

  GraphLaplacian l1 = tu::random_laplacian(3, gen);
  GraphLaplacian l2 = tu::random_laplacian(3, gen);
  GraphLaplacian l3 = tu::random_laplacian(3, gen);
  NetworkSample ga, gb;
  ga.add(l1);
  ga.add(l2);
  gb.add(l3);
  AnalysisConfig eu;
  eu.metric = Metric::euclidean;
  double expect = (0.5 * (l1.entries() + l2.entries()) - l3.entries()).squaredNorm();
  CHECK(two_sample_statistic(ga, gb, eu) == doctest::Approx(expect).epsilon(1e-10));

  NetworkSample empty;
  CHECK_THROWS_AS(two_sample_statistic(ga, empty, eu), validation_error);
}

TEST_CASE("procrustes distance between group means never exceeds the frobenius one") {
  // The domination is pointwise: on the same pair of mean matrices the
  // procrustes distance minimises over a superset containing the identity.
  // (With each statistic using its own flavor of mean, small reversals do
  // occur, so that comparison is not asserted.)
  auto gen = tu::rng(102);
  AnalysisConfig sqrt_cfg;
  sqrt_cfg.metric = Metric::sqrt;
  for (int rep = 0; rep < 10; ++rep) {
    NetworkSample a = random_sample(4, 4, gen);
    NetworkSample b = random_sample(4, 5, gen);
    EmbeddedSample ea = embed_sample(a, sqrt_cfg);
    EmbeddedSample eb = embed_sample(b, sqrt_cfg);
    CHECK(procrustes_matrix_distance(ea.eta_hat, eb.eta_hat) <=
          frobenius_distance(ea.eta_hat, eb.eta_hat) + 1e-12);
  }
}

TEST_CASE("permutation p-value rule, hand-set cases") {
  CHECK(permutation_p_value(2.5, {1.0, 2.0, 3.0, 4.0}) == doctest::Approx(0.5));
  CHECK(permutation_p_value(5.0, {1.0, 2.0, 3.0, 4.0}) == doctest::Approx(0.0));
  CHECK(permutation_p_value(0.5, {1.0, 2.0, 3.0, 4.0}) == doctest::Approx(1.0));
  CHECK(permutation_p_value(1.0, {1.0, 2.0, 3.0, 4.0}) == doctest::Approx(1.0));  // T <= T*(1)
  CHECK(permutation_p_value(4.0, {1.0, 2.0, 3.0, 4.0}) == doctest::Approx(0.25)); // ties at the top
  CHECK(permutation_p_value(3.0, {3.0, 3.0, 3.0}) == doctest::Approx(1.0));
  CHECK(permutation_p_value(3.1, {3.0, 3.0, 3.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(permutation_p_value(1.0, {}), validation_error);
}

TEST_CASE("permutation test: determinism, fields, boundary behaviour") {
  auto gen = tu::rng(103);
  NetworkSample a = random_sample(4, 5, gen);
  NetworkSample b = random_sample(4, 6, gen);
  AnalysisConfig cfg;
  cfg.seed = 42;

  TwoSampleResult r1 = permutation_test(a, b, cfg, 99);
  TwoSampleResult r2 = permutation_test(a, b, cfg, 99);
  CHECK(r1.p_value == r2.p_value);
  CHECK(r1.statistic == r2.statistic);
  CHECK(r1.r == 99);
  CHECK(static_cast<int>(r1.permuted.size()) == 99);
  CHECK(std::is_sorted(r1.permuted.begin(), r1.permuted.end()));

  cfg.seed = 43;
  TwoSampleResult r3 = permutation_test(a, b, cfg, 99);
  CHECK(r3.statistic == r1.statistic);  // statistic ignores the seed

  // identical groups: the observed statistic is zero, every permuted one >= 0
  TwoSampleResult same = permutation_test(a, a, cfg, 49);
  CHECK(same.statistic == doctest::Approx(0.0));
  CHECK(same.p_value == doctest::Approx(1.0));

  CHECK_THROWS_AS(permutation_test(a, b, cfg, 0), validation_error);
}

TEST_CASE("permutation test agrees across thread counts") {
  auto gen = tu::rng(104);
  NetworkSample a = random_sample(3, 4, gen);
  NetworkSample b = random_sample(3, 4, gen);
  AnalysisConfig serial;
  serial.seed = 7;
  serial.threads = 1;
  AnalysisConfig parallel = serial;
  parallel.threads = 4;
  CHECK(permutation_test(a, b, serial, 60).p_value ==
        permutation_test(a, b, parallel, 60).p_value);
}

TEST_CASE("permutation test under the procrustes metric") {
  auto gen = tu::rng(105);
  NetworkSample a = random_sample(3, 3, gen);
  NetworkSample b = random_sample(3, 3, gen);
  AnalysisConfig cfg;
  cfg.metric = Metric::procrustes;
  cfg.seed = 5;
  TwoSampleResult r = permutation_test(a, b, cfg, 19);
  CHECK(r.p_value >= 0.0);
  CHECK(r.p_value <= 1.0);
}

TEST_CASE("asymptotic test: fields, determinism and the scaling identity") {
  auto gen = tu::rng(106);
  NetworkSample a = random_sample(4, 8, gen);
  NetworkSample b = random_sample(4, 10, gen);
  AnalysisConfig cfg;
  cfg.seed = 11;
  cfg.mc_draws = 20000;

  TwoSampleResult r = asymptotic_test(a, b, cfg);
  CHECK(r.deltas.size() == 6);
  CHECK(r.deltas.minCoeff() > 0.0);
  CHECK(r.scaled_statistic ==
        doctest::Approx(8.0 * 10.0 / 18.0 * r.statistic).epsilon(1e-12));
  CHECK(asymptotic_test(a, b, cfg).p_value == r.p_value);

  // duplicating both samples doubles the scale factor on the same distance
  NetworkSample a2 = a, b2 = b;
  for (std::size_t k = 0; k < a.size(); ++k) a2.add(a.observations[k]);
  for (std::size_t k = 0; k < b.size(); ++k) b2.add(b.observations[k]);
  TwoSampleResult rr = asymptotic_test(a2, b2, cfg);
  CHECK(rr.statistic == doctest::Approx(r.statistic).epsilon(1e-10));
  CHECK(rr.scaled_statistic == doctest::Approx(2.0 * r.scaled_statistic).epsilon(1e-10));

  // zero-distance groups sit at the far left of the null
  TwoSampleResult same = asymptotic_test(a, a, cfg);
  CHECK(same.p_value == doctest::Approx(1.0));

  AnalysisConfig proc;
  proc.metric = Metric::procrustes;
  CHECK_THROWS_AS(asymptotic_test(a, b, proc), validation_error);

  NetworkSample solo;
  solo.add(a.observations[0]);
  CHECK_THROWS_AS(asymptotic_test(solo, b, cfg), validation_error);
}

TEST_CASE("weighted chi-square sampler matches chi-square quantiles when weights are one") {
  for (int k : {1, 3, 6}) {
    Vector ones = Vector::Ones(k);
    for (double p : {0.1, 0.5, 0.9, 0.95}) {
      double q = chi2_quantile(p, k);
      double tail = weighted_chi2_tail(ones, q, 123, 200000, 2);
      CHECK(std::abs(tail - (1.0 - p)) < 0.01);
    }
  }
  CHECK(weighted_chi2_tail(Vector::Ones(3), 0.0, 1, 100, 1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(weighted_chi2_tail(Vector(), 1.0, 1, 100, 1), validation_error);
}

TEST_CASE("edge z-screen: zero difference, antisymmetry, defaults, drop rule") {
  auto gen = tu::rng(107);
  EdgeZParams params;
  CHECK(params.beta == 0.2);
  CHECK(params.big_n == 200.0);

  NetworkSample a = random_sample(5, 6, gen);
  NetworkSample b = random_sample(5, 7, gen);
  EdgeZTable ab = edge_z_table(a, b, params);
  EdgeZTable ba = edge_z_table(b, a, params);
  REQUIRE(ab.rows.size() == ba.rows.size());
  CHECK(ab.q == doctest::Approx(ba.q));
  for (const auto& row : ab.rows) {
    auto match = std::find_if(ba.rows.begin(), ba.rows.end(), [&](const EdgeZRow& r) {
      return r.i == row.i && r.j == row.j;
    });
    REQUIRE(match != ba.rows.end());
    CHECK(match->z == doctest::Approx(-row.z).epsilon(1e-10));
  }
  // sorted by |z| descending
  for (std::size_t k = 1; k < ab.rows.size(); ++k)
    CHECK(std::abs(ab.rows[k].z) <= std::abs(ab.rows[k - 1].z) + 1e-15);

  // identical groups: all z exactly zero
  EdgeZTable same = edge_z_table(a, a, params);
  for (const auto& row : same.rows) CHECK(row.z == doctest::Approx(0.0));
}

TEST_CASE("edge z-screen drops pairs unused by one group") {
  // group A uses edge (0,1) and (1,2); group B only (0,1)
  Matrix wa = Matrix::Zero(3, 3);
  wa(0, 1) = wa(1, 0) = 1.0;
  wa(1, 2) = wa(2, 1) = 2.0;
  Matrix wb = Matrix::Zero(3, 3);
  wb(0, 1) = wb(1, 0) = 3.0;
  NetworkSample a, b;
  a.add(from_adjacency(AdjacencyMatrix{wa, {}}));
  a.add(from_adjacency(AdjacencyMatrix{wa, {}}));
  b.add(from_adjacency(AdjacencyMatrix{wb, {}}));
  b.add(from_adjacency(AdjacencyMatrix{wb, {}}));
  EdgeZTable t = edge_z_table(a, b, EdgeZParams{});
  CHECK(t.rows.size() == 1);
  CHECK(t.dropped == 2);
  CHECK(t.rows[0].i == 1);
  CHECK(t.rows[0].j == 0);
}

TEST_CASE("edge z-screen recovers a planted differing edge") {
  auto gen = tu::rng(108);
  std::normal_distribution<double> jitter(0.0, 0.05);
  auto make_group = [&](double planted_weight, int n) {
    NetworkSample s;
    for (int k = 0; k < n; ++k) {
      Matrix w = Matrix::Zero(6, 6);
      for (Eigen::Index j = 0; j < 6; ++j)
        for (Eigen::Index i = j + 1; i < 6; ++i) {
          double v = 1.0 + jitter(gen);
          w(i, j) = v;
          w(j, i) = v;
        }
      double p = planted_weight + jitter(gen);
      w(5, 4) = p;
      w(4, 5) = p;
      s.add(from_adjacency(AdjacencyMatrix{w, {}}));
    }
    return s;
  };
  NetworkSample a = make_group(3.0, 12);
  NetworkSample b = make_group(1.0, 12);
  EdgeZTable t = edge_z_table(a, b, EdgeZParams{});
  REQUIRE(!t.rows.empty());
  CHECK(t.rows[0].i == 5);
  CHECK(t.rows[0].j == 4);
  CHECK(t.rows[0].z > 0.0);  // group A uses it more
}
