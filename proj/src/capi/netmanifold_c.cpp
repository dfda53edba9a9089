#include "netmanifold/netmanifold.h"

#include <cstdio>
#include <cstring>
#include <string>

#include "core/corpus.hpp"
#include "core/explore.hpp"
#include "core/io.hpp"
#include "core/means.hpp"
#include "core/pca.hpp"
#include "core/regression.hpp"
#include "core/two_sample.hpp"

namespace {

thread_local std::string g_last_error = "no error";

void remember(const char* what) { g_last_error = what; }

// Runs the body, translating the library's exception taxonomy into the
// C status codes.
template <typename F>
nm_status guarded(F&& body) {
  try {
    body();
    return NM_OK;
  } catch (const netman::numerical_error& e) {
    remember(e.what());
    return NM_ERR_NUMERICAL;
  } catch (const netman::error& e) {
    remember(e.what());
    return NM_ERR_INVALID;
  } catch (const std::exception& e) {
    remember(e.what());
    return NM_ERR_INVALID;
  }
}

nm_status invalid(const char* what) {
  remember(what);
  return NM_ERR_INVALID;
}

netman::ReverseMap reverse_map_from_string(const std::string& s) {
  using netman::ReverseMap;
  if (s == "odd_integer_power") return ReverseMap::odd_integer_power;
  if (s == "nearest_psd_then_power") return ReverseMap::nearest_psd_then_power;
  if (s == "right_gram") return ReverseMap::right_gram;
  if (s == "left_gram") return ReverseMap::left_gram;
  throw netman::validation_error("unknown reverse map '" + s + "'");
}

// query-length-or-fill protocol shared by the string-returning calls
nm_status fill_string(const std::string& text, char* buf, size_t* len) {
  if (!len) return invalid("length pointer is null");
  if (!buf) {
    *len = text.size();
    return NM_OK;
  }
  if (*len < text.size() + 1) return invalid("buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  *len = text.size();
  return NM_OK;
}

using RowMajorMap = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using ConstRowMajorMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

}  // namespace

struct nm_config {
  netman::AnalysisConfig cfg;
};

struct nm_laplacian {
  netman::GraphLaplacian l;
};

struct nm_sample {
  netman::NetworkSample s;
};

struct nm_manifest {
  netman::CorpusManifest m;
};

struct nm_pca {
  netman::PCAResult r;
};

struct nm_regression {
  netman::RegressionFit fit;
};

struct nm_test2_result {
  netman::TwoSampleResult r;
};

struct nm_edge_table {
  netman::EdgeZTable t;
};

extern "C" {

const char* nm_version(void) { return "0.1.0"; }

const char* nm_last_error(void) { return g_last_error.c_str(); }

/* ---- config ---- */

nm_config* nm_config_create(void) { return new nm_config{}; }

void nm_config_destroy(nm_config* cfg) { delete cfg; }

nm_status nm_config_set_metric(nm_config* cfg, const char* metric) {
  if (!cfg || !metric) return invalid("null argument");
  return guarded([&] { cfg->cfg.metric = netman::metric_from_string(metric); });
}

nm_status nm_config_set_alpha(nm_config* cfg, double alpha) {
  if (!cfg) return invalid("null argument");
  if (!(alpha > 0.0)) return invalid("alpha must be positive");
  cfg->cfg.alpha = alpha;
  cfg->cfg.alpha_overridden = true;
  return NM_OK;
}

nm_status nm_config_set_reverse_map(nm_config* cfg, const char* name) {
  if (!cfg || !name) return invalid("null argument");
  return guarded([&] {
    cfg->cfg.reverse_map = reverse_map_from_string(name);
    cfg->cfg.reverse_map_overridden = true;
  });
}

nm_status nm_config_set_seed(nm_config* cfg, uint64_t seed) {
  if (!cfg) return invalid("null argument");
  cfg->cfg.seed = seed;
  return NM_OK;
}

nm_status nm_config_set_threads(nm_config* cfg, unsigned threads) {
  if (!cfg) return invalid("null argument");
  cfg->cfg.threads = threads;
  return NM_OK;
}

nm_status nm_config_set_mc_draws(nm_config* cfg, int draws) {
  if (!cfg) return invalid("null argument");
  if (draws < 1) return invalid("mc draws must be positive");
  cfg->cfg.mc_draws = draws;
  return NM_OK;
}

nm_status nm_config_set_qp(nm_config* cfg, int max_iterations, double eps_primal,
                           double eps_dual) {
  if (!cfg) return invalid("null argument");
  return guarded([&] {
    netman::QPSettings qp = cfg->cfg.qp;
    qp.max_iterations = max_iterations;
    qp.eps_primal = eps_primal;
    qp.eps_dual = eps_dual;
    qp.validate();
    cfg->cfg.qp = qp;
  });
}

nm_status nm_config_json(const nm_config* cfg, char* buf, size_t* len) {
  if (!cfg) return invalid("null argument");
  const netman::AnalysisConfig& c = cfg->cfg;
  char tmp[512];
  std::snprintf(tmp, sizeof(tmp),
                "{\"metric\":\"%s\",\"alpha\":%.17g,\"reverse_map\":\"%s\",\"seed\":%llu,"
                "\"threads\":%u,\"mc_draws\":%d,\"qp\":{\"max_iterations\":%d,"
                "\"eps_primal\":%g,\"eps_dual\":%g}}",
                netman::to_string(c.metric).c_str(), c.effective_alpha(),
                netman::to_string(c.effective_reverse_map()).c_str(),
                static_cast<unsigned long long>(c.seed), c.threads, c.mc_draws,
                c.qp.max_iterations, c.qp.eps_primal, c.qp.eps_dual);
  return fill_string(tmp, buf, len);
}

/* ---- laplacians ---- */

nm_status nm_laplacian_create(size_t m, const double* entries, nm_laplacian** out) {
  if (!entries || !out) return invalid("null argument");
  return guarded([&] {
    ConstRowMajorMap e(entries, static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    *out = new nm_laplacian{netman::GraphLaplacian::make(e)};
  });
}

nm_status nm_laplacian_from_adjacency(size_t m, const double* weights, nm_laplacian** out) {
  if (!weights || !out) return invalid("null argument");
  return guarded([&] {
    ConstRowMajorMap w(weights, static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    *out = new nm_laplacian{netman::from_adjacency(netman::AdjacencyMatrix{w, {}})};
  });
}

void nm_laplacian_destroy(nm_laplacian* l) { delete l; }

size_t nm_laplacian_dim(const nm_laplacian* l) {
  return l ? static_cast<size_t>(l->l.dim()) : 0;
}

nm_status nm_laplacian_entries(const nm_laplacian* l, double* out) {
  if (!l || !out) return invalid("null argument");
  RowMajorMap(out, l->l.dim(), l->l.dim()) = l->l.entries();
  return NM_OK;
}

nm_status nm_laplacian_adjacency(const nm_laplacian* l, double* out) {
  if (!l || !out) return invalid("null argument");
  return guarded([&] {
    netman::AdjacencyMatrix a = netman::to_adjacency(l->l);
    RowMajorMap(out, a.dim(), a.dim()) = a.weights;
  });
}

const char* nm_laplacian_label(const nm_laplacian* l, size_t i) {
  if (!l || l->l.node_labels().size() <= i) return nullptr;
  return l->l.node_labels()[i].c_str();
}

nm_status nm_laplacian_set_labels(nm_laplacian* l, const char* const* labels, size_t count) {
  if (!l || (!labels && count > 0)) return invalid("null argument");
  return guarded([&] {
    std::vector<std::string> ls(labels, labels + count);
    l->l.set_node_labels(std::move(ls));
  });
}

nm_status nm_laplacian_trace_normalize(const nm_laplacian* l, nm_laplacian** out) {
  if (!l || !out) return invalid("null argument");
  return guarded([&] { *out = new nm_laplacian{netman::trace_normalize(l->l)}; });
}

nm_status nm_laplacian_read_csv(const char* path, nm_laplacian** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new nm_laplacian{netman::read_laplacian_csv(path)}; });
}

nm_status nm_laplacian_write_csv(const nm_laplacian* l, const char* path) {
  if (!l || !path) return invalid("null argument");
  return guarded([&] { netman::write_laplacian_csv(l->l, path); });
}

nm_status nm_adjacency_read_tsv(const char* path, nm_laplacian** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    *out = new nm_laplacian{netman::from_adjacency(netman::read_adjacency_tsv(path))};
  });
}

/* ---- samples ---- */

nm_sample* nm_sample_create(void) { return new nm_sample{}; }

void nm_sample_destroy(nm_sample* s) { delete s; }

nm_status nm_sample_add(nm_sample* s, const nm_laplacian* l) {
  if (!s || !l) return invalid("null argument");
  return guarded([&] {
    s->s.add(l->l);
    if (!s->s.labels.empty()) s->s.labels.resize(s->s.size());
    if (!s->s.groups.empty()) s->s.groups.resize(s->s.size());
    if (!s->s.covariates.empty()) s->s.covariates.resize(s->s.size());
  });
}

size_t nm_sample_size(const nm_sample* s) { return s ? s->s.size() : 0; }

size_t nm_sample_dim(const nm_sample* s) { return s ? static_cast<size_t>(s->s.dim()) : 0; }

nm_status nm_sample_get(const nm_sample* s, size_t k, nm_laplacian** out) {
  if (!s || !out) return invalid("null argument");
  if (k >= s->s.size()) return invalid("observation index out of range");
  return guarded([&] { *out = new nm_laplacian{s->s.observations[k]}; });
}

nm_status nm_sample_set_label(nm_sample* s, size_t k, const char* label) {
  if (!s || !label) return invalid("null argument");
  if (k >= s->s.size()) return invalid("observation index out of range");
  s->s.labels.resize(s->s.size());
  s->s.labels[k] = label;
  return NM_OK;
}

const char* nm_sample_label(const nm_sample* s, size_t k) {
  if (!s || s->s.labels.size() <= k) return nullptr;
  return s->s.labels[k].c_str();
}

nm_status nm_sample_set_group(nm_sample* s, size_t k, const char* group) {
  if (!s || !group) return invalid("null argument");
  if (k >= s->s.size()) return invalid("observation index out of range");
  s->s.groups.resize(s->s.size());
  s->s.groups[k] = group;
  return NM_OK;
}

const char* nm_sample_group(const nm_sample* s, size_t k) {
  if (!s || s->s.groups.size() <= k) return nullptr;
  return s->s.groups[k].c_str();
}

nm_status nm_sample_set_covariate(nm_sample* s, size_t k, const double* t, size_t u) {
  if (!s || !t) return invalid("null argument");
  if (k >= s->s.size()) return invalid("observation index out of range");
  s->s.covariates.resize(s->s.size());
  s->s.covariates[k] = Eigen::Map<const netman::Vector>(t, static_cast<Eigen::Index>(u));
  return NM_OK;
}

nm_status nm_sample_subset_by_group(const nm_sample* s, const char* group, nm_sample** out) {
  if (!s || !group || !out) return invalid("null argument");
  return guarded([&] {
    if (s->s.groups.empty())
      throw netman::validation_error("sample carries no group tags");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < s->s.size(); ++k)
      if (s->s.groups[k] == group) idx.push_back(k);
    if (idx.empty())
      throw netman::validation_error(std::string("no observations in group '") + group + "'");
    *out = new nm_sample{s->s.subset(idx)};
  });
}

/* ---- corpus ---- */

nm_status nm_manifest_read(const char* path, nm_manifest** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new nm_manifest{netman::read_manifest(path, 2, 1)}; });
}

void nm_manifest_destroy(nm_manifest* m) { delete m; }

size_t nm_manifest_size(const nm_manifest* m) { return m ? m->m.documents.size() : 0; }

const char* nm_manifest_path(const nm_manifest* m, size_t k) {
  if (!m || k >= m->m.documents.size()) return nullptr;
  return m->m.documents[k].path.c_str();
}

const char* nm_manifest_label(const nm_manifest* m, size_t k) {
  if (!m || k >= m->m.documents.size()) return nullptr;
  return m->m.documents[k].label.c_str();
}

const char* nm_manifest_group(const nm_manifest* m, size_t k) {
  if (!m || k >= m->m.documents.size()) return nullptr;
  return m->m.documents[k].group.c_str();
}

int nm_manifest_year(const nm_manifest* m, size_t k, double* year) {
  if (!m || k >= m->m.documents.size() || !m->m.documents[k].has_year) return 0;
  if (year) *year = m->m.documents[k].year;
  return 1;
}

nm_status nm_sanitize_label(const char* label, char* buf, size_t* len) {
  if (!label) return invalid("null argument");
  return fill_string(netman::sanitize_label(label), buf, len);
}

nm_status nm_ingest(const char* manifest_path, size_t vocabulary_size, int span,
                    const char* out_dir, unsigned threads, size_t* n_written,
                    size_t* n_skipped) {
  if (!manifest_path || !out_dir) return invalid("null argument");
  return guarded([&] {
    netman::CorpusBuild build = netman::ingest_corpus(
        manifest_path, static_cast<Eigen::Index>(vocabulary_size), span, out_dir, threads);
    if (n_written) *n_written = build.sample.size();
    if (n_skipped) *n_skipped = build.skipped.size();
  });
}

nm_status nm_corpus_load(const char* manifest_path, size_t vocabulary_size, int span,
                         unsigned threads, nm_sample** out) {
  if (!manifest_path || !out) return invalid("null argument");
  return guarded([&] {
    netman::CorpusManifest manifest = netman::read_manifest(
        manifest_path, static_cast<Eigen::Index>(vocabulary_size), span);
    netman::CorpusBuild build = netman::build_corpus_sample(manifest, threads);
    *out = new nm_sample{std::move(build.sample)};
  });
}

/* ---- metrics ---- */

nm_status nm_distance(const nm_laplacian* l1, const nm_laplacian* l2, const nm_config* cfg,
                      double* out) {
  if (!l1 || !l2 || !cfg || !out) return invalid("null argument");
  return guarded([&] { *out = netman::dist(l1->l, l2->l, cfg->cfg); });
}

nm_status nm_distance_matrix(const nm_sample* s, const nm_config* cfg, double* out) {
  if (!s || !cfg || !out) return invalid("null argument");
  return guarded([&] {
    netman::Matrix d = netman::distance_matrix(s->s, cfg->cfg);
    RowMajorMap(out, d.rows(), d.cols()) = d;
  });
}

/* ---- means and paths ---- */

nm_status nm_mean(const nm_sample* s, const nm_config* cfg, nm_laplacian** out) {
  if (!s || !cfg || !out) return invalid("null argument");
  return guarded([&] { *out = new nm_laplacian{netman::mean(s->s, cfg->cfg).mu_hat}; });
}

nm_status nm_interpolate(const nm_laplacian* l1, const nm_laplacian* l2, double c,
                         const nm_config* cfg, nm_laplacian** out) {
  if (!l1 || !l2 || !cfg || !out) return invalid("null argument");
  return guarded([&] { *out = new nm_laplacian{netman::interpolate(l1->l, l2->l, c, cfg->cfg)}; });
}

/* ---- exploratory ---- */

nm_status nm_mds(const double* dist, size_t n, size_t k, double* coords, double* eigenvalues,
                 int* negative_truncated) {
  if (!dist || !coords) return invalid("null argument");
  return guarded([&] {
    ConstRowMajorMap d(dist, static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    netman::MdsResult r = netman::classical_mds(d, static_cast<Eigen::Index>(k));
    RowMajorMap(coords, r.coordinates.rows(), r.coordinates.cols()) = r.coordinates;
    if (eigenvalues)
      Eigen::Map<netman::Vector>(eigenvalues, r.eigenvalues.size()) = r.eigenvalues;
    if (negative_truncated) *negative_truncated = r.negative_truncated;
  });
}

nm_status nm_ward(const double* dist, size_t n, int squared, int* merges, double* heights) {
  if (!dist || !merges || !heights) return invalid("null argument");
  return guarded([&] {
    ConstRowMajorMap d(dist, static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    auto ms = netman::ward_clustering(d, squared != 0);
    for (std::size_t s = 0; s < ms.size(); ++s) {
      merges[2 * s] = ms[s].left;
      merges[2 * s + 1] = ms[s].right;
      heights[s] = ms[s].height;
    }
  });
}

/* ---- pca ---- */

nm_status nm_pca_run(const nm_sample* s, const nm_config* cfg, nm_pca** out) {
  if (!s || !cfg || !out) return invalid("null argument");
  return guarded([&] { *out = new nm_pca{netman::tangent_pca(s->s, cfg->cfg)}; });
}

void nm_pca_destroy(nm_pca* p) { delete p; }

size_t nm_pca_rank(const nm_pca* p) { return p ? static_cast<size_t>(p->r.rank()) : 0; }

double nm_pca_eigenvalue(const nm_pca* p, size_t j) {
  if (!p || j >= static_cast<size_t>(p->r.rank())) return 0.0;
  return p->r.eigenvalues(static_cast<Eigen::Index>(j));
}

double nm_pca_variance_ratio(const nm_pca* p, size_t j) {
  if (!p || j >= static_cast<size_t>(p->r.rank())) return 0.0;
  return p->r.variance_ratio(static_cast<Eigen::Index>(j));
}

double nm_pca_score(const nm_pca* p, size_t obs, size_t j) {
  if (!p || obs >= static_cast<size_t>(p->r.scores.rows()) ||
      j >= static_cast<size_t>(p->r.rank()))
    return 0.0;
  return p->r.scores(static_cast<Eigen::Index>(obs), static_cast<Eigen::Index>(j));
}

nm_status nm_pca_path(const nm_pca* p, const nm_config* cfg, size_t j, double c,
                      nm_laplacian** out) {
  if (!p || !cfg || !out) return invalid("null argument");
  return guarded([&] {
    *out = new nm_laplacian{netman::pc_path(p->r, static_cast<int>(j) + 1, c, cfg->cfg)};
  });
}

nm_status nm_pca_word_importance(const nm_pca* p, size_t j, double* out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    netman::Vector imp = netman::word_importance(p->r, static_cast<int>(j) + 1);
    Eigen::Map<netman::Vector>(out, imp.size()) = imp;
  });
}

nm_status nm_pca_project(const nm_pca* p, const nm_config* cfg, const nm_laplacian* l,
                         double* scores) {
  if (!p || !cfg || !l || !scores) return invalid("null argument");
  return guarded([&] {
    netman::Vector s = netman::pca_project(p->r, l->l, cfg->cfg);
    Eigen::Map<netman::Vector>(scores, s.size()) = s;
  });
}

/* ---- regression ---- */

nm_status nm_regress(const nm_sample* s, const nm_config* cfg, nm_regression** out) {
  if (!s || !cfg || !out) return invalid("null argument");
  return guarded([&] { *out = new nm_regression{netman::fit_regression(s->s, cfg->cfg)}; });
}

void nm_regression_destroy(nm_regression* r) { delete r; }

size_t nm_regression_n_covariates(const nm_regression* r) {
  return r ? static_cast<size_t>(r->fit.n_covariates()) : 0;
}

size_t nm_regression_dim(const nm_regression* r) {
  return r ? static_cast<size_t>(r->fit.dim()) : 0;
}

double nm_regression_coef_norm(const nm_regression* r, size_t w) {
  if (!r || w >= static_cast<size_t>(r->fit.coef.rows())) return 0.0;
  return r->fit.coef.row(static_cast<Eigen::Index>(w)).norm();
}

nm_status nm_regression_predict(const nm_regression* r, const nm_config* cfg, const double* t,
                                size_t u, nm_laplacian** out) {
  if (!r || !cfg || !t || !out) return invalid("null argument");
  return guarded([&] {
    Eigen::Map<const netman::Vector> tv(t, static_cast<Eigen::Index>(u));
    *out = new nm_laplacian{netman::predict(r->fit, tv, cfg->cfg)};
  });
}

nm_status nm_regression_lrt(const nm_regression* r, size_t w, double* statistic, double* p_value,
                            double* df, int* small_sample) {
  if (!r) return invalid("null argument");
  return guarded([&] {
    netman::LrtResult lrt = netman::lrt_covariate(r->fit, static_cast<int>(w));
    if (statistic) *statistic = lrt.statistic;
    if (p_value) *p_value = lrt.p_value;
    if (df) *df = lrt.df;
    if (small_sample) *small_sample = lrt.small_sample ? 1 : 0;
  });
}

/* ---- two-sample ---- */

nm_status nm_test2(const nm_sample* a, const nm_sample* b, const nm_config* cfg,
                   const char* method, int r, nm_test2_result** out) {
  if (!a || !b || !cfg || !method || !out) return invalid("null argument");
  return guarded([&] {
    std::string m = method;
    if (m == "asymptotic") {
      *out = new nm_test2_result{netman::asymptotic_test(a->s, b->s, cfg->cfg)};
    } else if (m == "permutation") {
      *out = new nm_test2_result{netman::permutation_test(a->s, b->s, cfg->cfg, r)};
    } else {
      throw netman::validation_error("unknown method '" + m +
                                     "' (expected asymptotic or permutation)");
    }
  });
}

void nm_test2_destroy(nm_test2_result* t) { delete t; }

double nm_test2_statistic(const nm_test2_result* t) { return t ? t->r.statistic : 0.0; }

double nm_test2_scaled_statistic(const nm_test2_result* t) {
  return t ? t->r.scaled_statistic : 0.0;
}

double nm_test2_p_value(const nm_test2_result* t) { return t ? t->r.p_value : 1.0; }

int nm_test2_r(const nm_test2_result* t) { return t ? t->r.r : 0; }

size_t nm_test2_n_deltas(const nm_test2_result* t) {
  return t ? static_cast<size_t>(t->r.deltas.size()) : 0;
}

nm_status nm_test2_deltas(const nm_test2_result* t, double* out) {
  if (!t || !out) return invalid("null argument");
  Eigen::Map<netman::Vector>(out, t->r.deltas.size()) = t->r.deltas;
  return NM_OK;
}

size_t nm_test2_n_permuted(const nm_test2_result* t) { return t ? t->r.permuted.size() : 0; }

nm_status nm_test2_permuted(const nm_test2_result* t, double* out) {
  if (!t || !out) return invalid("null argument");
  std::memcpy(out, t->r.permuted.data(), t->r.permuted.size() * sizeof(double));
  return NM_OK;
}

/* ---- edge screen ---- */

nm_status nm_edges(const nm_sample* a, const nm_sample* b, double beta, double big_n,
                   unsigned threads, nm_edge_table** out) {
  if (!a || !b || !out) return invalid("null argument");
  return guarded([&] {
    netman::EdgeZParams params;
    if (beta > 0.0) params.beta = beta;
    if (big_n > 0.0) params.big_n = big_n;
    *out = new nm_edge_table{netman::edge_z_table(a->s, b->s, params, threads)};
  });
}

void nm_edge_table_destroy(nm_edge_table* t) { delete t; }

size_t nm_edge_table_size(const nm_edge_table* t) { return t ? t->t.rows.size() : 0; }

size_t nm_edge_table_dropped(const nm_edge_table* t) { return t ? t->t.dropped : 0; }

double nm_edge_table_q(const nm_edge_table* t) { return t ? t->t.q : 0.0; }

nm_status nm_edge_table_row(const nm_edge_table* t, size_t idx, size_t* node_i, size_t* node_j,
                            double* mean_a, double* mean_b, double* s_p, double* z) {
  if (!t) return invalid("null argument");
  if (idx >= t->t.rows.size()) return invalid("row index out of range");
  const netman::EdgeZRow& row = t->t.rows[idx];
  if (node_i) *node_i = static_cast<size_t>(row.i);
  if (node_j) *node_j = static_cast<size_t>(row.j);
  if (mean_a) *mean_a = row.mean_a;
  if (mean_b) *mean_b = row.mean_b;
  if (s_p) *s_p = row.s_p;
  if (z) *z = row.z;
  return NM_OK;
}

const char* nm_edge_table_node_label(const nm_edge_table* t, size_t node) {
  if (!t || t->t.node_labels.size() <= node) return nullptr;
  return t->t.node_labels[node].c_str();
}

} /* extern "C" */
