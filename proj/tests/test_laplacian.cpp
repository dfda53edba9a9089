#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/laplacian.hpp"
#include "test_util.hpp"

using namespace netman;
namespace tu = netman::testutil;

TEST_CASE("from_adjacency: two-node edge") {
  Matrix w(2, 2);
  w << 0, 1, 1, 0;
  GraphLaplacian l = from_adjacency(AdjacencyMatrix{w, {}});
  Matrix expect(2, 2);
  expect << 1, -1, -1, 1;
  CHECK((l.entries() - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("from_adjacency: empty network") {
  GraphLaplacian l = from_adjacency(AdjacencyMatrix{Matrix::Zero(3, 3), {}});
  CHECK(l.entries().norm() == 0.0);
}

TEST_CASE("from_adjacency: hand-computed 3x3") {
  Matrix w(3, 3);
  w << 0, 2, 1, 2, 0, 0, 1, 0, 0;
  GraphLaplacian l = from_adjacency(AdjacencyMatrix{w, {}});
  Matrix expect(3, 3);
  expect << 3, -2, -1, -2, 2, 0, -1, 0, 1;
  CHECK((l.entries() - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("from_adjacency: rejects bad input naming the offender") {
  Matrix w = Matrix::Zero(3, 3);
  w(1, 0) = -0.5;
  w(0, 1) = -0.5;
  CHECK_THROWS_WITH_AS(from_adjacency(AdjacencyMatrix{w, {}}),
                       doctest::Contains("(1,0)"), validation_error);

  Matrix asym = Matrix::Zero(3, 3);
  asym(2, 0) = 1.0;  // missing mirror entry
  CHECK_THROWS_AS(from_adjacency(AdjacencyMatrix{asym, {}}), validation_error);
}

TEST_CASE("to_adjacency: round trips") {
  Matrix l2(2, 2);
  l2 << 1, -1, -1, 1;
  AdjacencyMatrix a = to_adjacency(GraphLaplacian::make(l2));
  Matrix expect(2, 2);
  expect << 0, 1, 1, 0;
  CHECK((a.weights - expect).norm() == doctest::Approx(0.0));

  Matrix w(3, 3);
  w << 0, 2, 1, 2, 0, 0, 1, 0, 0;
  AdjacencyMatrix round = to_adjacency(from_adjacency(AdjacencyMatrix{w, {}}));
  CHECK((round.weights - w).norm() == doctest::Approx(0.0));
}

TEST_CASE("from/to adjacency: mutually inverse on random inputs") {
  auto gen = tu::rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    AdjacencyMatrix a = tu::random_adjacency(6, gen);
    GraphLaplacian l = from_adjacency(a);
    AdjacencyMatrix back = to_adjacency(l);
    CHECK((back.weights - a.weights).lpNorm<Eigen::Infinity>() < 1e-12);
    GraphLaplacian l2 = from_adjacency(back);
    CHECK((l2.entries() - l.entries()).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("random adjacency pipelines satisfy the polytope constraints") {
  auto gen = tu::rng(12);
  Tolerances tol;
  for (int rep = 0; rep < 50; ++rep) {
    GraphLaplacian l = tu::random_laplacian(5, gen, 0.5);
    validate_laplacian(l.entries(), tol);  // would throw on violation
    CHECK(l.entries().row(0).sum() == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("trace_normalize") {
  Matrix l2(2, 2);
  l2 << 1, -1, -1, 1;
  GraphLaplacian n = trace_normalize(GraphLaplacian::make(l2));
  Matrix expect(2, 2);
  expect << 0.5, -0.5, -0.5, 0.5;
  CHECK((n.entries() - expect).norm() == doctest::Approx(0.0));
  CHECK(n.trace() == doctest::Approx(1.0).epsilon(1e-12));

  // idempotent on normalized input
  GraphLaplacian again = trace_normalize(n);
  CHECK((again.entries() - n.entries()).norm() == doctest::Approx(0.0));

  // trace 4 divides by 4
  Matrix l4 = 4.0 * n.entries();
  GraphLaplacian quarter = trace_normalize(GraphLaplacian::make(l4));
  CHECK(quarter.trace() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((quarter.entries() - l4 / 4.0).norm() == doctest::Approx(0.0));

  CHECK_THROWS_AS(trace_normalize(GraphLaplacian::make(Matrix::Zero(3, 3))), validation_error);
}

TEST_CASE("helmert: closed form rows") {
  Matrix h2 = helmert(2);
  CHECK(h2.rows() == 1);
  CHECK(h2(0, 0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(h2(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)));

  Matrix h3 = helmert(3);
  CHECK(h3(0, 0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(h3(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(h3(0, 2) == doctest::Approx(0.0));
  CHECK(h3(1, 0) == doctest::Approx(-1.0 / std::sqrt(6.0)));
  CHECK(h3(1, 1) == doctest::Approx(-1.0 / std::sqrt(6.0)));
  CHECK(h3(1, 2) == doctest::Approx(2.0 / std::sqrt(6.0)));
  CHECK((h3 * h3.transpose() - Matrix::Identity(2, 2)).norm() < 1e-14);

  CHECK_THROWS_AS(helmert(1), validation_error);
}

TEST_CASE("helmert: orthonormal rows and centering identity, m = 2..50") {
  for (Eigen::Index m = 2; m <= 50; ++m) {
    Matrix h = helmert(m);
    CHECK((h * h.transpose() - Matrix::Identity(m - 1, m - 1)).lpNorm<Eigen::Infinity>() < 1e-12);
    Matrix c = Matrix::Identity(m, m) - Matrix::Constant(m, m, 1.0 / static_cast<double>(m));
    CHECK((h.transpose() * h - c).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK((h * Vector::Ones(m)).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("helmert: structured applications match the dense matrix") {
  auto gen = tu::rng(7);
  for (Eigen::Index m : {2, 3, 7, 20}) {
    Matrix h = helmert(m);
    Matrix x = tu::random_symmetric(m, gen);
    CHECK((helmert_left(x) - h * x).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK((helmert_right(x) - x * h.transpose()).lpNorm<Eigen::Infinity>() < 1e-12);
    Matrix y = tu::random_symmetric(m - 1, gen);
    CHECK((helmert_left_t(y) - h.transpose() * y).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK((helmert_right_t(y) - y * h).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK((helmert_sandwich(x) - h * x * h.transpose()).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("vech_star: identity and single off-diagonal") {
  Matrix i2 = Matrix::Identity(2, 2);
  Vector q = vech_star(i2);
  CHECK(q.size() == 3);
  CHECK(q.norm() == doctest::Approx(std::sqrt(2.0)));  // |I_2|_F

  Matrix s(2, 2);
  s << 0, 1, 1, 0;
  Vector qs = vech_star(s);
  CHECK(qs.cwiseAbs().maxCoeff() == doctest::Approx(std::sqrt(2.0)));
  CHECK(qs.norm() == doctest::Approx(std::sqrt(2.0)));

  CHECK_THROWS_AS(vech_star(Matrix::Random(3, 3)), validation_error);
}

TEST_CASE("vech_star and vec: isometric bijections on random input") {
  auto gen = tu::rng(21);
  for (int rep = 0; rep < 30; ++rep) {
    Matrix s = tu::random_symmetric(5, gen);
    Vector q = vech_star(s);
    CHECK(q.norm() == doctest::Approx(s.norm()).epsilon(1e-12));
    CHECK((vech_star_inv(q) - s).lpNorm<Eigen::Infinity>() < 1e-12);

    Matrix m = Matrix::Random(4, 4);
    Vector v = vec(m);
    CHECK(v.norm() == doctest::Approx(m.norm()).epsilon(1e-12));
    CHECK((vec_inv(v) - m).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("vec stacks columns") {
  Matrix m(2, 2);
  m << 1, 3, 2, 4;
  Vector v = vec(m);
  CHECK(v(0) == 1);
  CHECK(v(1) == 2);
  CHECK(v(2) == 3);
  CHECK(v(3) == 4);
  CHECK_THROWS_AS(vec_inv(Vector::Zero(5)), validation_error);
}

TEST_CASE("sample subset and validation") {
  auto gen = tu::rng(3);
  NetworkSample s;
  for (int k = 0; k < 4; ++k) s.add(tu::random_laplacian(4, gen));
  s.labels = {"a", "b", "c", "d"};
  s.covariates.assign(4, Vector::Ones(1));
  s.validate();
  NetworkSample sub = s.subset({2, 0});
  CHECK(sub.size() == 2);
  CHECK(sub.labels[0] == "c");

  s.covariates[1] = Vector::Ones(2);
  CHECK_THROWS_AS(s.validate(), validation_error);
}
