#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "core/io.hpp"
#include "test_util.hpp"

using namespace netman;
namespace fs = std::filesystem;
namespace tu = netman::testutil;

namespace {
fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("netman_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("laplacian csv: exact round trip with and without labels") {
  fs::path dir = scratch("roundtrip");
  auto gen = tu::rng(141);
  GraphLaplacian l = tu::random_laplacian(5, gen);
  std::string path = (dir / "l.csv").string();

  write_laplacian_csv(l, path);
  GraphLaplacian back = read_laplacian_csv(path);
  CHECK((back.entries() - l.entries()).norm() == 0.0);  // 17 digits round-trip doubles
  CHECK(back.node_labels().empty());

  GraphLaplacian labelled = l;
  labelled.set_node_labels({"the", "and", "to", "of", "a"});
  write_laplacian_csv(labelled, path);
  GraphLaplacian back2 = read_laplacian_csv(path);
  CHECK(back2.node_labels() == labelled.node_labels());

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "# netmanifold laplacian v1, m=5");
  fs::remove_all(dir);
}

TEST_CASE("laplacian csv: malformed files fail with line numbers") {
  fs::path dir = scratch("malformed");
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(dir / name, std::ios::binary);
    out << content;
    return (dir / name).string();
  };

  CHECK_THROWS_WITH_AS(read_laplacian_csv(write("h.csv", "wrong header\n")),
                       doctest::Contains(":1:"), io_error);
  CHECK_THROWS_WITH_AS(
      read_laplacian_csv(write("c.csv", "# netmanifold laplacian v1, m=2\n\n1,-1\n-1\n")),
      doctest::Contains(":4:"), io_error);
  CHECK_THROWS_WITH_AS(
      read_laplacian_csv(write("n.csv", "# netmanifold laplacian v1, m=2\n\n1,x\n-1,1\n")),
      doctest::Contains("bad number"), io_error);
  CHECK_THROWS_WITH_AS(
      read_laplacian_csv(write("t.csv", "# netmanifold laplacian v1, m=2\n\n1,-1\n")),
      doctest::Contains("end of file"), io_error);
  // structurally fine but not a Laplacian
  CHECK_THROWS_AS(
      read_laplacian_csv(write("v.csv", "# netmanifold laplacian v1, m=2\n\n1,1\n1,1\n")),
      io_error);
  CHECK_THROWS_AS(read_laplacian_csv((dir / "missing.csv").string()), io_error);
  fs::remove_all(dir);
}

TEST_CASE("edge-list adjacency: first-appearance ordering and accumulation") {
  fs::path dir = scratch("edges");
  std::string path = (dir / "e.tsv").string();
  {
    std::ofstream out(path, std::ios::binary);
    out << "# comment line\n";
    out << "cat\tdog\t2.0\n";
    out << "dog\tbird\t1.5\n";
    out << "cat\tdog\t0.5\n";  // accumulates onto the first edge
  }
  AdjacencyMatrix a = read_adjacency_tsv(path);
  REQUIRE(a.node_labels == std::vector<std::string>{"cat", "dog", "bird"});
  CHECK(a.weights(0, 1) == doctest::Approx(2.5));
  CHECK(a.weights(1, 2) == doctest::Approx(1.5));
  CHECK(a.weights(0, 2) == 0.0);
  GraphLaplacian l = from_adjacency(a);
  CHECK(l.dim() == 3);

  {
    std::ofstream out(dir / "bad.tsv", std::ios::binary);
    out << "a\ta\t1.0\n";
  }
  CHECK_THROWS_WITH_AS(read_adjacency_tsv((dir / "bad.tsv").string()),
                       doctest::Contains("self-loop"), io_error);
  {
    std::ofstream out(dir / "neg.tsv", std::ios::binary);
    out << "a\tb\t-1.0\n";
  }
  CHECK_THROWS_AS(read_adjacency_tsv((dir / "neg.tsv").string()), io_error);
  fs::remove_all(dir);
}

TEST_CASE("sanitize_label keeps names filesystem-safe") {
  CHECK(sanitize_label("Pride & Prejudice") == "Pride___Prejudice");
  CHECK(sanitize_label("") == "doc");
  CHECK(sanitize_label("plain") == "plain");
}
