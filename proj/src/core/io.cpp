#include "core/io.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace netman {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line, const std::string& what) {
  throw io_error(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

void write_laplacian_csv(const GraphLaplacian& l, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  const Eigen::Index m = l.dim();
  out << "# netmanifold laplacian v1, m=" << m << "\n";
  const auto& labels = l.node_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ',';
    out << labels[i];
  }
  out << "\n";
  const Matrix& e = l.entries();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j) out << ',';
      out << format_double(e(i, j));
    }
    out << "\n";
  }
  if (!out) throw io_error("write failed for " + path);
}

GraphLaplacian read_laplacian_csv(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) parse_fail(path, 1, "empty file");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string prefix = "# netmanifold laplacian v1, m=";
  if (line.rfind(prefix, 0) != 0) parse_fail(path, line_no, "missing header '" + prefix + "<m>'");
  Eigen::Index m = 0;
  try {
    m = static_cast<Eigen::Index>(std::stol(line.substr(prefix.size())));
  } catch (const std::exception&) {
    parse_fail(path, line_no, "bad node count in header");
  }
  if (m < 2) parse_fail(path, line_no, "node count must be at least 2");

  if (!std::getline(in, line)) parse_fail(path, line_no + 1, "missing node-label line");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> labels;
  if (!line.empty()) {
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) labels.push_back(f);
    if (static_cast<Eigen::Index>(labels.size()) != m)
      parse_fail(path, line_no, "expected " + std::to_string(m) + " labels, found " +
                                    std::to_string(labels.size()));
  }

  Matrix e(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (!std::getline(in, line)) parse_fail(path, line_no + 1, "unexpected end of file");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::stringstream ss(line);
    std::string f;
    Eigen::Index j = 0;
    while (std::getline(ss, f, ',')) {
      if (j >= m) parse_fail(path, line_no, "too many columns");
      try {
        std::size_t used = 0;
        e(i, j) = std::stod(f, &used);
        if (used != f.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        parse_fail(path, line_no, "bad number '" + f + "' in column " + std::to_string(j + 1));
      }
      ++j;
    }
    if (j != m)
      parse_fail(path, line_no, "expected " + std::to_string(m) + " columns, found " +
                                    std::to_string(j));
  }
  try {
    return GraphLaplacian::make(std::move(e), std::move(labels), tol);
  } catch (const validation_error& err) {
    throw io_error(path + ": " + err.what());
  }
}

AdjacencyMatrix read_adjacency_tsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> names;
  std::map<std::string, Eigen::Index> ids;
  struct Edge {
    Eigen::Index i, j;
    double w;
  };
  std::vector<Edge> edges;
  auto intern = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    Eigen::Index id = static_cast<Eigen::Index>(names.size());
    names.push_back(name);
    ids.emplace(name, id);
    return id;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string a, b, w;
    if (!std::getline(ss, a, '\t') || !std::getline(ss, b, '\t') || !std::getline(ss, w, '\t'))
      parse_fail(path, line_no, "expected node_i<TAB>node_j<TAB>weight");
    double weight = 0.0;
    try {
      std::size_t used = 0;
      weight = std::stod(w, &used);
      if (used != w.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      parse_fail(path, line_no, "bad weight '" + w + "'");
    }
    if (weight < 0.0) parse_fail(path, line_no, "negative weight");
    if (a == b) parse_fail(path, line_no, "self-loop on node '" + a + "'");
    edges.push_back(Edge{intern(a), intern(b), weight});
  }
  if (names.size() < 2) throw io_error(path + ": edge list names fewer than 2 nodes");
  Matrix w = Matrix::Zero(static_cast<Eigen::Index>(names.size()),
                          static_cast<Eigen::Index>(names.size()));
  for (const auto& e : edges) {
    w(e.i, e.j) += e.w;
    w(e.j, e.i) += e.w;
  }
  return AdjacencyMatrix{std::move(w), std::move(names)};
}

void write_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  for (const auto& w : vocab.words) out << w << "\n";
  if (!out) throw io_error("write failed for " + path);
}

std::string sanitize_label(const std::string& label) {
  std::string s;
  s.reserve(label.size());
  for (unsigned char c : label) s.push_back(std::isalnum(c) ? static_cast<char>(c) : '_');
  if (s.empty()) s = "doc";
  return s;
}

CorpusBuild ingest_corpus(const std::string& manifest_path, Eigen::Index vocabulary_size, int span,
                          const std::string& out_dir, unsigned threads) {
  CorpusManifest manifest = read_manifest(manifest_path, vocabulary_size, span);
  CorpusBuild build = build_corpus_sample(manifest, threads);

  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw io_error("cannot create output directory " + out_dir);

  for (std::size_t k = 0; k < build.sample.size(); ++k) {
    std::string name = sanitize_label(build.sample.labels[k]) + ".csv";
    write_laplacian_csv(build.sample.observations[k], (dir / name).string());
  }
  write_vocabulary(build.vocab, (dir / "vocab.txt").string());
  return build;
}

}  // namespace netman
