#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "core/laplacian.hpp"

namespace netman {

// Lowercases and splits on non-alphabetic characters; apostrophes between
// letters survive, so contractions stay single tokens.
std::vector<std::string> tokenize(const std::string& text);

struct Vocabulary {
  std::vector<std::string> words;        // rank order, most frequent first
  std::vector<long long> frequencies;    // combined counts, aligned with words
  std::unordered_map<std::string, Eigen::Index> index;

  Eigen::Index size() const { return static_cast<Eigen::Index>(words.size()); }
};

// Top-m words of the combined streams; ties break lexicographically.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& token_streams,
                            Eigen::Index m);

// Counts unordered pairs of distinct in-vocabulary word types within a
// forward window of `span` positions; windows run across sentence
// boundaries.
AdjacencyMatrix cooccurrence(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                             int span);

struct DocumentSpec {
  std::string path;
  std::string label;
  std::string group;
  double year = 0.0;
  bool has_year = false;
};

struct CorpusManifest {
  std::vector<DocumentSpec> documents;
  Eigen::Index vocabulary_size = 0;
  int span = 5;
};

// TSV with header line `path<TAB>label<TAB>group<TAB>year`; paths resolve
// relative to the manifest's directory.
CorpusManifest read_manifest(const std::string& path, Eigen::Index vocabulary_size, int span);

struct CorpusBuild {
  NetworkSample sample;
  Vocabulary vocab;
  std::vector<std::string> skipped;  // labels of documents with an empty network
};

// Tokenize -> shared vocabulary -> windowed counts -> L = D - A ->
// trace-normalize, one Laplacian per document. Documents with no
// in-vocabulary co-occurrence are reported and excluded.
CorpusBuild build_corpus_sample(const CorpusManifest& manifest, unsigned threads = 1);

}  // namespace netman
