#pragma once

#include <string>

#include "core/corpus.hpp"
#include "core/laplacian.hpp"

namespace netman {

// On-disk Laplacian format, version 1:
//   # netmanifold laplacian v1, m=<m>
//   <label_0>,...,<label_{m-1}>          (blank line when unlabelled)
//   m rows of m comma-separated doubles  (full matrix)
// Doubles print with 17 significant digits, so identical inputs emit
// byte-identical files.
void write_laplacian_csv(const GraphLaplacian& l, const std::string& path);
GraphLaplacian read_laplacian_csv(const std::string& path, const Tolerances& tol = {});

// Edge-list adjacency: node_i<TAB>node_j<TAB>weight, nodes ordered by
// first appearance.
AdjacencyMatrix read_adjacency_tsv(const std::string& path);

void write_vocabulary(const Vocabulary& vocab, const std::string& path);

// Runs the corpus pipeline and writes one <label>.csv per document plus
// vocab.txt under out_dir. Returns the build (sample + skip report).
CorpusBuild ingest_corpus(const std::string& manifest_path, Eigen::Index vocabulary_size, int span,
                          const std::string& out_dir, unsigned threads = 1);

// Filesystem-safe variant of a document label, used for output names.
std::string sanitize_label(const std::string& label);

}  // namespace netman
