#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string q(const std::string& s) { return "'" + s + "'"; }

int run(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args;
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST_CASE("full pipeline on the bundled micro-fixtures stays under ten seconds") {
  fs::path work = fs::temp_directory_path() / "netman_cli_pipeline";
  fs::remove_all(work);
  fs::create_directories(work);
  fs::path data = work / "data";
  std::string manifest = std::string(FIXTURES_DIR) + "/manifest.tsv";

  auto t0 = std::chrono::steady_clock::now();

  CHECK(run("ingest --manifest " + q(manifest) + " --m 10 --span 5 --out " + q(data.string()) +
            " > " + q((work / "ingest.log").string())) == 0);
  REQUIRE(fs::exists(data / "Meadow.csv"));
  REQUIRE(fs::exists(data / "vocab.txt"));
  CHECK(line_count(data / "vocab.txt") == 10);

  std::string sample = " --manifest " + q(manifest) + " --dir " + q(data.string());

  CHECK(run("dist" + sample + " --metric sqrt --out " + q((work / "dist.csv").string())) == 0);
  CHECK(line_count(work / "dist.csv") == 4);  // header + 3 rows

  CHECK(run("mds" + sample + " --k 2 --out " + q((work / "mds.csv").string()) +
            " 2> /dev/null") == 0);
  CHECK(line_count(work / "mds.csv") == 4);

  CHECK(run("cluster" + sample + " --ward d2 --out " + q((work / "merges.csv").string())) == 0);
  CHECK(line_count(work / "merges.csv") == 3);  // header + 2 merges

  CHECK(run("mean" + sample + " --metric sqrt --out " + q((work / "mean.csv").string()) +
            " 2> /dev/null") == 0);
  CHECK(slurp(work / "mean.csv").rfind("# netmanifold laplacian v1, m=10", 0) == 0);

  CHECK(run("pca" + sample + " --metric euclidean --scores-out " +
            q((work / "scores.csv").string()) + " --importance-out " +
            q((work / "imp.csv").string()) + " 2> /dev/null") == 0);
  CHECK(line_count(work / "scores.csv") == 4);
  CHECK(line_count(work / "imp.csv") == 11);  // header + 10 words

  CHECK(run("regress" + sample + " --metric sqrt --covariate year --out " +
            q((work / "regress.json").string()) + " --fitted-out " +
            q((work / "fitted.csv").string()) + " 2> /dev/null") == 0);
  {
    std::string j = slurp(work / "regress.json");
    CHECK(j.find("\"lrt\"") != std::string::npos);
    CHECK(j.find("\"p_value\"") != std::string::npos);
    CHECK(line_count(work / "fitted.csv") >= 3);
  }

  CHECK(run("test2" + sample +
            " --method permutation --metric sqrt --r 19 --seed 7 --group-a pastoral "
            "--group-b industrial --out " +
            q((work / "test2.json").string())) == 0);
  {
    std::string j = slurp(work / "test2.json");
    CHECK(j.find("\"statistic\"") != std::string::npos);
    CHECK(j.find("\"r\": 19") != std::string::npos);
  }

  CHECK(run("edges" + sample + " --group-a pastoral --group-b industrial --top 5 --out " +
            q((work / "edges.tsv").string()) + " 2> /dev/null") == 0);
  {
    std::string t = slurp(work / "edges.tsv");
    CHECK(t.rfind("word_i\tword_j", 0) == 0);
    CHECK(line_count(work / "edges.tsv") <= 6);
  }

  CHECK(run("interpolate --from " + q((data / "Meadow.csv").string()) + " --to " +
            q((data / "Fog.csv").string()) + " --c -5,0.5,6 --metric sqrt --out-prefix " +
            q((work / "path_").string()) + " > /dev/null") == 0);
  CHECK(fs::exists(work / "path_m5.csv"));
  CHECK(fs::exists(work / "path_0_5.csv"));
  CHECK(fs::exists(work / "path_6.csv"));

  auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(seconds < 10.0);

  // determinism: same seed, same result file
  CHECK(run("test2" + sample +
            " --method permutation --metric sqrt --r 19 --seed 7 --group-a pastoral "
            "--group-b industrial --out " +
            q((work / "test2_again.json").string())) == 0);
  CHECK(slurp(work / "test2.json") == slurp(work / "test2_again.json"));

  fs::remove_all(work);
}

TEST_CASE("cli exit codes distinguish validation from success") {
  CHECK(run("dist --inputs /nonexistent.csv 2> /dev/null") == 1);
  CHECK(run("mds 2> /dev/null") == 1);               // no inputs
  CHECK(run("ingest 2> /dev/null") != 0);            // missing required flag
  CHECK(run("--help > /dev/null") == 0);
  fs::path work = fs::temp_directory_path() / "netman_cli_codes";
  fs::remove_all(work);
  fs::create_directories(work);
  {
    std::ofstream bad(work / "bad.csv");
    bad << "not a laplacian\n";
  }
  CHECK(run("dist --inputs " + q((work / "bad.csv").string()) + " 2> /dev/null") == 1);
  fs::remove_all(work);
}

TEST_CASE("config file supplies defaults that flags override") {
  fs::path work = fs::temp_directory_path() / "netman_cli_config";
  fs::remove_all(work);
  fs::create_directories(work);
  fs::path data = work / "data";
  std::string manifest = std::string(FIXTURES_DIR) + "/manifest.tsv";
  REQUIRE(run("ingest --manifest " + q(manifest) + " --m 8 --span 5 --out " +
              q(data.string()) + " > /dev/null") == 0);
  {
    std::ofstream cfg(work / "netman.cfg");
    cfg << "# defaults for this study\n";
    cfg << "dist.metric=euclidean\n";
  }
  CHECK(run("dist --config " + q((work / "netman.cfg").string()) + " --dir " +
            q(data.string()) + " --out " + q((work / "d1.csv").string())) == 0);
  CHECK(run("dist --metric euclidean --dir " + q(data.string()) + " --out " +
            q((work / "d2.csv").string())) == 0);
  CHECK(slurp(work / "d1.csv") == slurp(work / "d2.csv"));
  fs::remove_all(work);
}
