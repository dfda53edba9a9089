#include "core/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace netman {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto is_letter = [](unsigned char c) { return std::isalpha(c) != 0; };
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_letter(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (c == '\'' && !cur.empty() && i + 1 < text.size() &&
               is_letter(static_cast<unsigned char>(text[i + 1]))) {
      cur.push_back('\'');  // internal apostrophe: keep the contraction whole
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& token_streams,
                            Eigen::Index m) {
  if (m < 2) throw validation_error("vocabulary: need at least 2 words");
  std::map<std::string, long long> counts;  // ordered map fixes the tie order up front
  for (const auto& stream : token_streams)
    for (const auto& tok : stream) ++counts[tok];
  if (static_cast<Eigen::Index>(counts.size()) < m)
    throw validation_error("vocabulary: corpus has only " + std::to_string(counts.size()) +
                           " distinct words, need " + std::to_string(m));

  std::vector<std::pair<std::string, long long>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  Vocabulary v;
  v.words.reserve(static_cast<std::size_t>(m));
  v.frequencies.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    v.words.push_back(ranked[static_cast<std::size_t>(i)].first);
    v.frequencies.push_back(ranked[static_cast<std::size_t>(i)].second);
    v.index.emplace(v.words.back(), i);
  }
  return v;
}

AdjacencyMatrix cooccurrence(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                             int span) {
  if (span < 1) throw validation_error("cooccurrence: span must be at least 1");
  const Eigen::Index m = vocab.size();
  // map tokens to vocabulary indices once; -1 marks out-of-vocabulary
  std::vector<Eigen::Index> ids(tokens.size());
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    auto it = vocab.index.find(tokens[t]);
    ids[t] = it == vocab.index.end() ? -1 : it->second;
  }
  Matrix w = Matrix::Zero(m, m);
  const std::size_t n = ids.size();
  for (std::size_t t = 0; t < n; ++t) {
    Eigen::Index a = ids[t];
    if (a < 0) continue;
    std::size_t hi = std::min(n, t + static_cast<std::size_t>(span) + 1);
    for (std::size_t s = t + 1; s < hi; ++s) {
      Eigen::Index b = ids[s];
      if (b < 0 || b == a) continue;  // same-type pairs would be self-loops
      w(a, b) += 1.0;
      w(b, a) += 1.0;
    }
  }
  return AdjacencyMatrix{std::move(w), vocab.words};
}

CorpusManifest read_manifest(const std::string& path, Eigen::Index vocabulary_size, int span) {
  std::ifstream in(path);
  if (!in) throw io_error("manifest: cannot open " + path);
  std::filesystem::path base = std::filesystem::path(path).parent_path();

  CorpusManifest manifest;
  manifest.vocabulary_size = vocabulary_size;
  manifest.span = span;

  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    if (!saw_header) {
      if (fields.size() < 2 || fields[0] != "path" || fields[1] != "label")
        throw io_error("manifest: line 1 must be the header 'path\tlabel\tgroup\tyear'");
      saw_header = true;
      continue;
    }
    if (fields.size() < 2)
      throw io_error("manifest: line " + std::to_string(line_no) + ": need at least path and label");
    DocumentSpec doc;
    std::filesystem::path p(fields[0]);
    doc.path = p.is_absolute() ? p.string() : (base / p).string();
    doc.label = fields[1];
    if (fields.size() > 2) doc.group = fields[2];
    if (fields.size() > 3 && !fields[3].empty()) {
      try {
        std::size_t used = 0;
        doc.year = std::stod(fields[3], &used);
        if (used != fields[3].size()) throw std::invalid_argument("");
        doc.has_year = true;
      } catch (const std::exception&) {
        throw io_error("manifest: line " + std::to_string(line_no) + ": bad year '" + fields[3] + "'");
      }
    }
    manifest.documents.push_back(std::move(doc));
  }
  if (!saw_header) throw io_error("manifest: empty file " + path);
  if (manifest.documents.empty()) throw io_error("manifest: no documents listed in " + path);
  return manifest;
}

CorpusBuild build_corpus_sample(const CorpusManifest& manifest, unsigned threads) {
  if (manifest.vocabulary_size < 2) throw validation_error("corpus: vocabulary size must be >= 2");
  if (manifest.span < 1) throw validation_error("corpus: span must be >= 1");

  const std::size_t n_docs = manifest.documents.size();
  std::vector<std::vector<std::string>> streams(n_docs);
  std::vector<std::string> read_errors(n_docs);
  parallel_for(n_docs, threads, [&](std::size_t k) {
    std::ifstream in(manifest.documents[k].path, std::ios::binary);
    if (!in) {
      read_errors[k] = manifest.documents[k].path;
      return;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    streams[k] = tokenize(buf.str());
  });
  for (const auto& err : read_errors)
    if (!err.empty()) throw io_error("corpus: cannot open document " + err);

  CorpusBuild out;
  out.vocab = build_vocabulary(streams, manifest.vocabulary_size);

  std::vector<GraphLaplacian> built;
  std::vector<char> ok(n_docs, 0);
  std::vector<Matrix> laps(n_docs);
  parallel_for(n_docs, threads, [&](std::size_t k) {
    AdjacencyMatrix adj = cooccurrence(streams[k], out.vocab, manifest.span);
    GraphLaplacian l = from_adjacency(adj);
    if (l.trace() > 0.0) {
      laps[k] = trace_normalize(l).entries();
      ok[k] = 1;
    }
  });

  for (std::size_t k = 0; k < n_docs; ++k) {
    const auto& doc = manifest.documents[k];
    if (!ok[k]) {
      out.skipped.push_back(doc.label);
      continue;
    }
    out.sample.observations.push_back(GraphLaplacian::make(std::move(laps[k]), out.vocab.words));
    out.sample.labels.push_back(doc.label);
    out.sample.groups.push_back(doc.group);
  }
  if (out.sample.observations.empty())
    throw validation_error("corpus: every document produced an empty network");

  // attach the year covariate when every retained document carries one
  bool all_years = true;
  for (std::size_t k = 0; k < n_docs; ++k)
    if (ok[k] && !manifest.documents[k].has_year) all_years = false;
  if (all_years) {
    for (std::size_t k = 0; k < n_docs; ++k) {
      if (!ok[k]) continue;
      Vector t(1);
      t(0) = manifest.documents[k].year;
      out.sample.covariates.push_back(t);
    }
  }
  out.sample.validate();
  return out;
}

}  // namespace netman
