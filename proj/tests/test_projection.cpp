#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/projection.hpp"
#include "test_util.hpp"

using namespace netman;
namespace tu = netman::testutil;

TEST_CASE("projection is the identity on feasible points") {
  auto gen = tu::rng(31);
  for (Eigen::Index m : {2, 3, 6, 12}) {
    GraphLaplacian l = tu::random_laplacian(m, gen);
    GraphLaplacian p = project_to_laplacian(l.entries());
    CHECK((p.entries() - l.entries()).lpNorm<Eigen::Infinity>() < 1e-8);
  }
}

TEST_CASE("m=2 all-positive off-diagonal projects to the zero matrix") {
  Matrix y(2, 2);
  y << -1, 1, 1, -1;  // centred symmetric but on the wrong side of the cone
  GraphLaplacian p = project_to_laplacian(y);
  CHECK(p.entries().norm() < 1e-8);
}

TEST_CASE("m=3 projection matches the active-set oracle") {
  auto gen = tu::rng(32);
  for (int rep = 0; rep < 200; ++rep) {
    Matrix y = tu::random_symmetric(3, gen, 1.5);
    Matrix expect = tu::brute_force_project_m3(y);
    GraphLaplacian p = project_to_laplacian(y);
    CHECK((p.entries() - expect).lpNorm<Eigen::Infinity>() < 1e-7);
  }
}

TEST_CASE("adversarial all-positive off-diagonals stay feasible") {
  // A positive diagonal legitimately pulls off-diagonals negative through
  // the row-sum coupling, so only feasibility and optimality are asserted.
  auto gen = tu::rng(33);
  for (Eigen::Index m : {3, 5, 8}) {
    Matrix y = tu::random_symmetric(m, gen).cwiseAbs();
    y = 0.5 * (y + y.transpose()).eval();
    GraphLaplacian p = project_to_laplacian(y);  // make() inside validates feasibility
    if (m == 3) {
      Matrix expect = tu::brute_force_project_m3(y);
      CHECK((p.entries() - expect).lpNorm<Eigen::Infinity>() < 1e-7);
    }
  }
}

TEST_CASE("projection onto a convex set is 1-Lipschitz") {
  auto gen = tu::rng(34);
  for (Eigen::Index m : {3, 5, 10}) {
    for (int rep = 0; rep < 30; ++rep) {
      Matrix y1 = tu::random_symmetric(m, gen, 2.0);
      Matrix y2 = tu::random_symmetric(m, gen, 2.0);
      Matrix p1 = project_to_laplacian(y1).entries();
      Matrix p2 = project_to_laplacian(y2).entries();
      CHECK((p1 - p2).norm() <= (y1 - y2).norm() + 1e-7);
    }
  }
}

TEST_CASE("projection optimality against random feasible perturbations") {
  auto gen = tu::rng(35);
  Matrix y = tu::random_symmetric(5, gen, 1.5);
  Matrix p = project_to_laplacian(y).entries();
  double f_star = (p - y).squaredNorm();
  for (int rep = 0; rep < 50; ++rep) {
    GraphLaplacian candidate = tu::random_laplacian(5, gen);
    double f = (candidate.entries() - y).squaredNorm();
    CHECK(f_star <= f + 1e-9);
  }
}

TEST_CASE("projection input validation and diagnostics") {
  CHECK_THROWS_AS(project_to_laplacian(Matrix::Random(4, 4)), validation_error);

  auto gen = tu::rng(36);
  ProjectionSolver solver(6);
  Matrix y = tu::random_symmetric(6, gen);
  solver.project(y);
  CHECK(solver.last_iterations() > 0);
  CHECK(solver.last_primal_residual() < 1e-6);

  QPSettings starved;
  starved.max_iterations = 1;
  ProjectionSolver hopeless(6, starved);
  CHECK_THROWS_AS(hopeless.project(y), numerical_error);

  QPSettings bad;
  bad.eps_primal = -1.0;
  CHECK_THROWS_AS(ProjectionSolver(3, bad), validation_error);
}

TEST_CASE("warm starts along a path reuse prior state") {
  auto gen = tu::rng(37);
  ProjectionSolver solver(8);
  Matrix a = tu::random_symmetric(8, gen);
  Matrix b = tu::random_symmetric(8, gen);
  solver.project(a);
  int cold = solver.last_iterations();
  // nearby inputs should converge at least as fast as the cold start
  solver.project(a + 0.001 * (b - a));
  CHECK(solver.last_iterations() <= cold + 5);
}
