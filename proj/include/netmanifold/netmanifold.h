/* netmanifold — statistical analysis of samples of networks identified
 * with their graph Laplacian matrices.
 *
 * C interface to the shared library. Every function that can fail
 * returns an nm_status; on failure nm_last_error() describes the problem
 * for the calling thread. Out-parameters are written only on NM_OK.
 * Objects returned through handle out-parameters are owned by the caller
 * and released with the matching _destroy function. Matrix buffers are
 * dense row-major doubles sized by the caller.
 */
#ifndef NETMANIFOLD_H
#define NETMANIFOLD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nm_status {
  NM_OK = 0,
  NM_ERR_INVALID = 1,   /* validation, parse or argument errors */
  NM_ERR_NUMERICAL = 2  /* solver or conditioning failures */
} nm_status;

typedef struct nm_config nm_config;
typedef struct nm_laplacian nm_laplacian;
typedef struct nm_sample nm_sample;
typedef struct nm_manifest nm_manifest;
typedef struct nm_pca nm_pca;
typedef struct nm_regression nm_regression;
typedef struct nm_test2_result nm_test2_result;
typedef struct nm_edge_table nm_edge_table;

const char* nm_version(void);
/* Message for the last failing call on this thread; never NULL. */
const char* nm_last_error(void);

/* ---- analysis configuration -------------------------------------- */

nm_config* nm_config_create(void);
void nm_config_destroy(nm_config* cfg);
/* metric: "euclidean" (alpha 1), "sqrt" (alpha 1/2) or "procrustes". */
nm_status nm_config_set_metric(nm_config* cfg, const char* metric);
nm_status nm_config_set_alpha(nm_config* cfg, double alpha);
/* reverse map: "odd_integer_power", "nearest_psd_then_power",
 * "right_gram" or "left_gram"; unset means the metric's default. */
nm_status nm_config_set_reverse_map(nm_config* cfg, const char* name);
nm_status nm_config_set_seed(nm_config* cfg, uint64_t seed);
nm_status nm_config_set_threads(nm_config* cfg, unsigned threads);
nm_status nm_config_set_mc_draws(nm_config* cfg, int draws);
nm_status nm_config_set_qp(nm_config* cfg, int max_iterations, double eps_primal,
                           double eps_dual);
/* Serialized configuration for result provenance. Call with buf == NULL
 * to query the required length (excluding the terminating NUL). */
nm_status nm_config_json(const nm_config* cfg, char* buf, size_t* len);

/* ---- graph Laplacians --------------------------------------------- */

nm_status nm_laplacian_create(size_t m, const double* entries_rowmajor, nm_laplacian** out);
nm_status nm_laplacian_from_adjacency(size_t m, const double* weights_rowmajor,
                                      nm_laplacian** out);
void nm_laplacian_destroy(nm_laplacian* l);
size_t nm_laplacian_dim(const nm_laplacian* l);
nm_status nm_laplacian_entries(const nm_laplacian* l, double* out);
nm_status nm_laplacian_adjacency(const nm_laplacian* l, double* out);
/* NULL when the Laplacian carries no labels. */
const char* nm_laplacian_label(const nm_laplacian* l, size_t i);
nm_status nm_laplacian_set_labels(nm_laplacian* l, const char* const* labels, size_t count);
nm_status nm_laplacian_trace_normalize(const nm_laplacian* l, nm_laplacian** out);
nm_status nm_laplacian_read_csv(const char* path, nm_laplacian** out);
nm_status nm_laplacian_write_csv(const nm_laplacian* l, const char* path);
/* Edge-list TSV (node_i<TAB>node_j<TAB>weight) -> L = D - A. */
nm_status nm_adjacency_read_tsv(const char* path, nm_laplacian** out);

/* ---- samples ------------------------------------------------------ */

nm_sample* nm_sample_create(void);
void nm_sample_destroy(nm_sample* s);
nm_status nm_sample_add(nm_sample* s, const nm_laplacian* l);
size_t nm_sample_size(const nm_sample* s);
size_t nm_sample_dim(const nm_sample* s);
nm_status nm_sample_get(const nm_sample* s, size_t k, nm_laplacian** out);
nm_status nm_sample_set_label(nm_sample* s, size_t k, const char* label);
const char* nm_sample_label(const nm_sample* s, size_t k);
nm_status nm_sample_set_group(nm_sample* s, size_t k, const char* group);
const char* nm_sample_group(const nm_sample* s, size_t k);
nm_status nm_sample_set_covariate(nm_sample* s, size_t k, const double* t, size_t u);
nm_status nm_sample_subset_by_group(const nm_sample* s, const char* group, nm_sample** out);

/* ---- corpus front end ---------------------------------------------- */

/* Manifest TSV with header path<TAB>label<TAB>group<TAB>year. */
nm_status nm_manifest_read(const char* path, nm_manifest** out);
void nm_manifest_destroy(nm_manifest* m);
size_t nm_manifest_size(const nm_manifest* m);
const char* nm_manifest_path(const nm_manifest* m, size_t k);
const char* nm_manifest_label(const nm_manifest* m, size_t k);
const char* nm_manifest_group(const nm_manifest* m, size_t k);
/* Returns 1 and writes *year when the document carries one, else 0. */
int nm_manifest_year(const nm_manifest* m, size_t k, double* year);

/* Filesystem-safe file stem for a document label. Query-length protocol
 * as in nm_config_json. */
nm_status nm_sanitize_label(const char* label, char* buf, size_t* len);

/* Full pipeline: tokenize, build the shared vocabulary, count windowed
 * co-occurrences, trace-normalize, write <label>.csv files plus
 * vocab.txt under out_dir. */
nm_status nm_ingest(const char* manifest_path, size_t vocabulary_size, int span,
                    const char* out_dir, unsigned threads, size_t* n_written,
                    size_t* n_skipped);
/* Same pipeline kept in memory; labels, groups and the year covariate
 * (when complete) are attached to the sample. */
nm_status nm_corpus_load(const char* manifest_path, size_t vocabulary_size, int span,
                         unsigned threads, nm_sample** out);

/* ---- metrics ------------------------------------------------------- */

nm_status nm_distance(const nm_laplacian* l1, const nm_laplacian* l2, const nm_config* cfg,
                      double* out);
nm_status nm_distance_matrix(const nm_sample* s, const nm_config* cfg, double* out);

/* ---- means and paths ------------------------------------------------ */

nm_status nm_mean(const nm_sample* s, const nm_config* cfg, nm_laplacian** out);
/* c = 0 reproduces l1, c = 1 reproduces l2; any real c is projected back
 * into the Laplacian polytope. */
nm_status nm_interpolate(const nm_laplacian* l1, const nm_laplacian* l2, double c,
                         const nm_config* cfg, nm_laplacian** out);

/* ---- exploratory analyses ------------------------------------------- */

/* Classical scaling of an n x n distance matrix into k dimensions.
 * eigenvalues (length n) and negative_truncated may be NULL. */
nm_status nm_mds(const double* dist, size_t n, size_t k, double* coords, double* eigenvalues,
                 int* negative_truncated);
/* Ward clustering; merges holds n-1 (left, right) id pairs where ids
 * 0..n-1 are observations and n+s is the cluster born at step s.
 * squared != 0 selects the squared-distance recurrence with square-rooted
 * heights. */
nm_status nm_ward(const double* dist, size_t n, int squared, int* merges, double* heights);

/* ---- principal components ------------------------------------------- */

nm_status nm_pca_run(const nm_sample* s, const nm_config* cfg, nm_pca** out);
void nm_pca_destroy(nm_pca* p);
size_t nm_pca_rank(const nm_pca* p);
double nm_pca_eigenvalue(const nm_pca* p, size_t j);
double nm_pca_variance_ratio(const nm_pca* p, size_t j);
double nm_pca_score(const nm_pca* p, size_t obs, size_t j);
/* Path of component j (0-based) at arc position c. */
nm_status nm_pca_path(const nm_pca* p, const nm_config* cfg, size_t j, double c,
                      nm_laplacian** out);
/* Importance shares of each node in component j; euclidean alpha=1 only. */
nm_status nm_pca_word_importance(const nm_pca* p, size_t j, double* out);
/* Scores of an out-of-sample Laplacian; writes nm_pca_rank values. */
nm_status nm_pca_project(const nm_pca* p, const nm_config* cfg, const nm_laplacian* l,
                         double* scores);

/* ---- regression ------------------------------------------------------ */

/* Regresses the sample on its covariates (set via nm_sample_set_covariate
 * or attached by nm_corpus_load). */
nm_status nm_regress(const nm_sample* s, const nm_config* cfg, nm_regression** out);
void nm_regression_destroy(nm_regression* r);
size_t nm_regression_n_covariates(const nm_regression* r);
size_t nm_regression_dim(const nm_regression* r);
/* Frobenius norm of the coefficient block; w = 0 is the intercept. */
double nm_regression_coef_norm(const nm_regression* r, size_t w);
nm_status nm_regression_predict(const nm_regression* r, const nm_config* cfg, const double* t,
                                size_t u, nm_laplacian** out);
/* Wilks test of H0: D_w = 0 for the 1-based covariate w. small_sample is
 * set when n < dim, where the chi-square reference is a stretch. */
nm_status nm_regression_lrt(const nm_regression* r, size_t w, double* statistic,
                            double* p_value, double* df, int* small_sample);

/* ---- two-sample tests ------------------------------------------------ */

/* method: "asymptotic" (weighted chi-square null, euclidean-family
 * metrics) or "permutation" (any metric; r relabelings). */
nm_status nm_test2(const nm_sample* a, const nm_sample* b, const nm_config* cfg,
                   const char* method, int r, nm_test2_result** out);
void nm_test2_destroy(nm_test2_result* t);
double nm_test2_statistic(const nm_test2_result* t);
double nm_test2_scaled_statistic(const nm_test2_result* t);
double nm_test2_p_value(const nm_test2_result* t);
int nm_test2_r(const nm_test2_result* t);
size_t nm_test2_n_deltas(const nm_test2_result* t);
nm_status nm_test2_deltas(const nm_test2_result* t, double* out);
size_t nm_test2_n_permuted(const nm_test2_result* t);
nm_status nm_test2_permuted(const nm_test2_result* t, double* out);

/* ---- edge-level screen ------------------------------------------------ */

/* Per word-pair z statistics between groups; rows sorted by |z|
 * descending. beta/big_n default to 0.2/200 when <= 0 is passed. */
nm_status nm_edges(const nm_sample* a, const nm_sample* b, double beta, double big_n,
                   unsigned threads, nm_edge_table** out);
void nm_edge_table_destroy(nm_edge_table* t);
size_t nm_edge_table_size(const nm_edge_table* t);
size_t nm_edge_table_dropped(const nm_edge_table* t);
double nm_edge_table_q(const nm_edge_table* t);
nm_status nm_edge_table_row(const nm_edge_table* t, size_t idx, size_t* node_i, size_t* node_j,
                            double* mean_a, double* mean_b, double* s_p, double* z);
/* NULL when the underlying sample carried no labels. */
const char* nm_edge_table_node_label(const nm_edge_table* t, size_t node);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NETMANIFOLD_H */
