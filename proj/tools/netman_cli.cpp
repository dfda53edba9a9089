// netmanifold command-line front end. Talks to the shared library purely
// through the public C API. Exit codes: 0 success, 1 validation or I/O
// error, 2 numerical failure.

#include <netmanifold/netmanifold.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
  int exit_code;
  CliError(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
};

void check(nm_status status, const std::string& context) {
  if (status == NM_OK) return;
  throw CliError(context + ": " + nm_last_error(), status == NM_ERR_NUMERICAL ? 2 : 1);
}

// RAII wrappers over the C handles
template <typename T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    std::swap(ptr, o.ptr);
    return *this;
  }
  ~Handle() {
    if (ptr) Destroy(ptr);
  }
  T* get() const { return ptr; }
  T** slot() { return &ptr; }
  explicit operator bool() const { return ptr != nullptr; }
};

using ConfigH = Handle<nm_config, nm_config_destroy>;
using LaplacianH = Handle<nm_laplacian, nm_laplacian_destroy>;
using SampleH = Handle<nm_sample, nm_sample_destroy>;
using ManifestH = Handle<nm_manifest, nm_manifest_destroy>;
using PcaH = Handle<nm_pca, nm_pca_destroy>;
using RegressionH = Handle<nm_regression, nm_regression_destroy>;
using Test2H = Handle<nm_test2_result, nm_test2_destroy>;
using EdgesH = Handle<nm_edge_table, nm_edge_table_destroy>;

// options shared by every analysis subcommand
struct CommonOpts {
  std::string metric = "sqrt";
  double alpha = 0.0;  // 0 = metric default
  std::string reverse_map;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  int mc_draws = 100000;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--metric", o.metric, "distance metric: euclidean, sqrt or procrustes")
      ->check(CLI::IsMember({"euclidean", "sqrt", "procrustes"}));
  cmd->add_option("--alpha", o.alpha, "embedding power (default 0.5; euclidean preset uses 1)");
  cmd->add_option("--reverse-map", o.reverse_map,
                  "reverse power map override (odd_integer_power, nearest_psd_then_power, "
                  "right_gram, left_gram)");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--threads", o.threads, "worker thread cap");
  cmd->add_option("--mc-draws", o.mc_draws, "Monte Carlo draws for the asymptotic null");
  cmd->add_option("--format", o.format, "tabular output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

ConfigH make_config(const CommonOpts& o) {
  ConfigH cfg(nm_config_create());
  check(nm_config_set_metric(cfg.get(), o.metric.c_str()), "config");
  if (o.alpha > 0.0) check(nm_config_set_alpha(cfg.get(), o.alpha), "config");
  if (!o.reverse_map.empty())
    check(nm_config_set_reverse_map(cfg.get(), o.reverse_map.c_str()), "config");
  check(nm_config_set_seed(cfg.get(), o.seed), "config");
  check(nm_config_set_threads(cfg.get(), o.threads), "config");
  check(nm_config_set_mc_draws(cfg.get(), o.mc_draws), "config");
  return cfg;
}

json config_json(const ConfigH& cfg) {
  size_t len = 0;
  check(nm_config_json(cfg.get(), nullptr, &len), "config");
  std::string buf(len + 1, '\0');
  len = buf.size();
  check(nm_config_json(cfg.get(), buf.data(), &len), "config");
  buf.resize(len);
  return json::parse(buf);
}

std::string sanitize(const std::string& label) {
  size_t len = 0;
  check(nm_sanitize_label(label.c_str(), nullptr, &len), "label");
  std::string buf(len + 1, '\0');
  len = buf.size();
  check(nm_sanitize_label(label.c_str(), buf.data(), &len), "label");
  buf.resize(len);
  return buf;
}

// sample-loading options shared by the analysis subcommands
struct InputOpts {
  std::vector<std::string> inputs;
  std::string dir;
  std::string manifest;
  std::string group;
};

void add_inputs(CLI::App* cmd, InputOpts& o, bool with_group = true) {
  cmd->add_option("--inputs", o.inputs, "Laplacian CSV files");
  cmd->add_option("--dir", o.dir, "directory of Laplacian CSV files (sorted by name)");
  cmd->add_option("--manifest", o.manifest,
                  "manifest TSV; observations load from <dir>/<label>.csv with label, group "
                  "and year attached");
  if (with_group) cmd->add_option("--group", o.group, "keep only observations in this group");
}

void sample_push(SampleH& sample, const LaplacianH& l, const std::string& label,
                 const std::string& group, const double* year) {
  size_t k = nm_sample_size(sample.get());
  check(nm_sample_add(sample.get(), l.get()), "sample");
  if (!label.empty()) check(nm_sample_set_label(sample.get(), k, label.c_str()), "sample");
  if (!group.empty()) check(nm_sample_set_group(sample.get(), k, group.c_str()), "sample");
  if (year) check(nm_sample_set_covariate(sample.get(), k, year, 1), "sample");
}

SampleH load_sample(const InputOpts& o) {
  SampleH sample(nm_sample_create());
  if (!o.manifest.empty()) {
    ManifestH manifest;
    check(nm_manifest_read(o.manifest.c_str(), manifest.slot()), "manifest");
    fs::path dir = o.dir.empty() ? fs::path(o.manifest).parent_path() : fs::path(o.dir);
    bool all_years = true;
    for (size_t k = 0; k < nm_manifest_size(manifest.get()); ++k)
      if (!nm_manifest_year(manifest.get(), k, nullptr)) all_years = false;
    for (size_t k = 0; k < nm_manifest_size(manifest.get()); ++k) {
      std::string label = nm_manifest_label(manifest.get(), k);
      std::string group = nm_manifest_group(manifest.get(), k);
      fs::path file = dir / (sanitize(label) + ".csv");
      LaplacianH l;
      check(nm_laplacian_read_csv(file.string().c_str(), l.slot()), file.string());
      double year = 0.0;
      bool has = nm_manifest_year(manifest.get(), k, &year) != 0;
      sample_push(sample, l, label, group, (all_years && has) ? &year : nullptr);
    }
  } else if (!o.dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.dir))
      if (entry.is_regular_file() && entry.path().extension() == ".csv")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw CliError("no .csv files under " + o.dir, 1);
    for (const auto& file : files) {
      LaplacianH l;
      check(nm_laplacian_read_csv(file.string().c_str(), l.slot()), file.string());
      sample_push(sample, l, file.stem().string(), "", nullptr);
    }
  } else if (!o.inputs.empty()) {
    for (const auto& file : o.inputs) {
      LaplacianH l;
      check(nm_laplacian_read_csv(file.c_str(), l.slot()), file);
      sample_push(sample, l, fs::path(file).stem().string(), "", nullptr);
    }
  } else {
    throw CliError("no input: pass --inputs, --dir or --manifest", 1);
  }

  if (!o.group.empty()) {
    SampleH filtered;
    check(nm_sample_subset_by_group(sample.get(), o.group.c_str(), filtered.slot()), "group");
    return filtered;
  }
  return sample;
}

std::vector<std::string> sample_labels(const SampleH& s) {
  std::vector<std::string> out;
  for (size_t k = 0; k < nm_sample_size(s.get()); ++k) {
    const char* l = nm_sample_label(s.get(), k);
    out.push_back(l ? l : ("obs" + std::to_string(k)));
  }
  return out;
}

struct OutStream {
  std::ofstream file;
  std::ostream* os;
  explicit OutStream(const std::string& path) {
    if (path.empty() || path == "-") {
      os = &std::cout;
    } else {
      file.open(path, std::ios::binary);
      if (!file) throw CliError("cannot open " + path + " for writing", 1);
      os = &file;
    }
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> parse_c_list(const std::string& spec) {
  std::vector<double> cs;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      size_t used = 0;
      cs.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw CliError("bad path position '" + tok + "' in --c", 1);
    }
  }
  if (cs.empty()) throw CliError("--c lists no positions", 1);
  return cs;
}

std::string c_tag(double c) {
  std::string s = fmt(c);
  for (auto& ch : s)
    if (ch == '.' || ch == '-' || ch == '+') ch = ch == '-' ? 'm' : '_';
  return s;
}

// ---- subcommand payloads ------------------------------------------------

struct DistOpts {
  CommonOpts common;
  InputOpts in;
  std::string out;
};

void run_dist(const DistOpts& o) {
  SampleH s = load_sample(o.in);
  ConfigH cfg = make_config(o.common);
  size_t n = nm_sample_size(s.get());
  std::vector<double> d(n * n);
  check(nm_distance_matrix(s.get(), cfg.get(), d.data()), "distance matrix");
  auto labels = sample_labels(s);
  OutStream out(o.out);
  if (o.common.format == "json") {
    json j;
    j["labels"] = labels;
    j["distances"] = json::array();
    for (size_t i = 0; i < n; ++i)
      j["distances"].push_back(std::vector<double>(d.begin() + static_cast<long>(i * n),
                                                   d.begin() + static_cast<long>((i + 1) * n)));
    j["config"] = config_json(cfg);
    *out.os << j.dump(2) << "\n";
  } else {
    *out.os << "label";
    for (const auto& l : labels) *out.os << "," << l;
    *out.os << "\n";
    for (size_t i = 0; i < n; ++i) {
      *out.os << labels[i];
      for (size_t j = 0; j < n; ++j) *out.os << "," << fmt(d[i * n + j]);
      *out.os << "\n";
    }
  }
}

struct MdsOpts {
  CommonOpts common;
  InputOpts in;
  std::string out;
  size_t k = 2;
};

void run_mds(const MdsOpts& o) {
  SampleH s = load_sample(o.in);
  ConfigH cfg = make_config(o.common);
  size_t n = nm_sample_size(s.get());
  std::vector<double> d(n * n);
  check(nm_distance_matrix(s.get(), cfg.get(), d.data()), "distance matrix");
  std::vector<double> coords(n * o.k), eigenvalues(n);
  int truncated = 0;
  check(nm_mds(d.data(), n, o.k, coords.data(), eigenvalues.data(), &truncated), "mds");
  if (truncated > 0)
    std::cerr << "mds: " << truncated
              << " requested axes had negative eigenvalues and were zeroed\n";
  auto labels = sample_labels(s);
  OutStream out(o.out);
  if (o.common.format == "json") {
    json j;
    j["labels"] = labels;
    j["eigenvalues"] = eigenvalues;
    j["negative_truncated"] = truncated;
    j["coordinates"] = json::array();
    for (size_t i = 0; i < n; ++i)
      j["coordinates"].push_back(std::vector<double>(
          coords.begin() + static_cast<long>(i * o.k),
          coords.begin() + static_cast<long>((i + 1) * o.k)));
    j["config"] = config_json(cfg);
    *out.os << j.dump(2) << "\n";
  } else {
    *out.os << "label";
    for (size_t j = 1; j <= o.k; ++j) *out.os << ",mds" << j;
    *out.os << "\n";
    for (size_t i = 0; i < n; ++i) {
      *out.os << labels[i];
      for (size_t j = 0; j < o.k; ++j) *out.os << "," << fmt(coords[i * o.k + j]);
      *out.os << "\n";
    }
  }
}

struct ClusterOpts {
  CommonOpts common;
  InputOpts in;
  std::string out;
  std::string ward = "d2";
};

void run_cluster(const ClusterOpts& o) {
  SampleH s = load_sample(o.in);
  ConfigH cfg = make_config(o.common);
  size_t n = nm_sample_size(s.get());
  std::vector<double> d(n * n);
  check(nm_distance_matrix(s.get(), cfg.get(), d.data()), "distance matrix");
  std::vector<int> merges(2 * (n - 1));
  std::vector<double> heights(n - 1);
  check(nm_ward(d.data(), n, o.ward == "d2" ? 1 : 0, merges.data(), heights.data()), "ward");
  auto labels = sample_labels(s);
  OutStream out(o.out);
  auto id_name = [&](int id) {
    return id < static_cast<int>(n) ? labels[static_cast<size_t>(id)]
                                    : ("cluster" + std::to_string(id - static_cast<int>(n)));
  };
  if (o.common.format == "json") {
    json j;
    j["labels"] = labels;
    j["ward"] = o.ward;
    j["merges"] = json::array();
    for (size_t step = 0; step + 1 < n; ++step)
      j["merges"].push_back({{"step", step},
                             {"left", merges[2 * step]},
                             {"right", merges[2 * step + 1]},
                             {"height", heights[step]}});
    j["config"] = config_json(cfg);
    *out.os << j.dump(2) << "\n";
  } else {
    *out.os << "step,left,right,height,left_name,right_name\n";
    for (size_t step = 0; step + 1 < n; ++step)
      *out.os << step << "," << merges[2 * step] << "," << merges[2 * step + 1] << ","
              << fmt(heights[step]) << "," << id_name(merges[2 * step]) << ","
              << id_name(merges[2 * step + 1]) << "\n";
  }
}

struct MeanOpts {
  CommonOpts common;
  InputOpts in;
  std::string out = "mean.csv";
};

void run_mean(const MeanOpts& o) {
  SampleH s = load_sample(o.in);
  ConfigH cfg = make_config(o.common);
  LaplacianH mu;
  check(nm_mean(s.get(), cfg.get(), mu.slot()), "mean");
  check(nm_laplacian_write_csv(mu.get(), o.out.c_str()), o.out);
  std::cerr << "mean of " << nm_sample_size(s.get()) << " networks -> " << o.out << "\n";
}

struct InterpolateOpts {
  CommonOpts common;
  std::string from, to;
  std::string c_list = "0.5";
  std::string out_prefix = "path_";
};

void run_interpolate(const InterpolateOpts& o) {
  ConfigH cfg = make_config(o.common);
  LaplacianH a, b;
  check(nm_laplacian_read_csv(o.from.c_str(), a.slot()), o.from);
  check(nm_laplacian_read_csv(o.to.c_str(), b.slot()), o.to);
  for (double c : parse_c_list(o.c_list)) {
    LaplacianH point;
    check(nm_interpolate(a.get(), b.get(), c, cfg.get(), point.slot()), "interpolate");
    std::string path = o.out_prefix + c_tag(c) + ".csv";
    check(nm_laplacian_write_csv(point.get(), path.c_str()), path);
    std::cout << path << "\n";
  }
}

struct PcaOpts {
  CommonOpts common;
  InputOpts in;
  std::string scores_out;
  std::string importance_out;
  size_t importance_pc = 1;
  size_t path_pc = 0;  // 0 = no paths
  std::string path_c = "-1,0,1";
  std::string path_prefix = "pc_path_";
};

void run_pca(const PcaOpts& o) {
  SampleH s = load_sample(o.in);
  ConfigH cfg = make_config(o.common);
  PcaH pca;
  check(nm_pca_run(s.get(), cfg.get(), pca.slot()), "pca");
  size_t r = nm_pca_rank(pca.get());
  size_t n = nm_sample_size(s.get());
  auto labels = sample_labels(s);

  {
    OutStream out(o.scores_out);
    if (o.common.format == "json") {
      json j;
      j["rank"] = r;
      j["eigenvalues"] = json::array();
      j["variance_ratio"] = json::array();
      for (size_t jx = 0; jx < r; ++jx) {
        j["eigenvalues"].push_back(nm_pca_eigenvalue(pca.get(), jx));
        j["variance_ratio"].push_back(nm_pca_variance_ratio(pca.get(), jx));
      }
      j["labels"] = labels;
      j["scores"] = json::array();
      for (size_t k = 0; k < n; ++k) {
        std::vector<double> row;
        for (size_t jx = 0; jx < r; ++jx) row.push_back(nm_pca_score(pca.get(), k, jx));
        j["scores"].push_back(row);
      }
      j["config"] = config_json(cfg);
      *out.os << j.dump(2) << "\n";
    } else {
      *out.os << "label";
      for (size_t jx = 1; jx <= r; ++jx) *out.os << ",s" << jx;
      *out.os << "\n";
      for (size_t k = 0; k < n; ++k) {
        *out.os << labels[k];
        for (size_t jx = 0; jx < r; ++jx) *out.os << "," << fmt(nm_pca_score(pca.get(), k, jx));
        *out.os << "\n";
      }
    }
  }
  {
    std::ostringstream summary;
    summary << "rank " << r << "; variance explained:";
    double cum = 0.0;
    for (size_t jx = 0; jx < std::min<size_t>(r, 5); ++jx) {
      cum += nm_pca_variance_ratio(pca.get(), jx);
      summary << " PC" << jx + 1 << " " << fmt(100.0 * nm_pca_variance_ratio(pca.get(), jx))
              << "% (cum " << fmt(100.0 * cum) << "%)";
    }
    std::cerr << summary.str() << "\n";
  }

  if (!o.importance_out.empty()) {
    if (o.importance_pc < 1 || o.importance_pc > r)
      throw CliError("--importance-pc out of range", 1);
    size_t m = nm_sample_dim(s.get());
    std::vector<double> imp(m);
    check(nm_pca_word_importance(pca.get(), o.importance_pc - 1, imp.data()), "importance");
    LaplacianH first;
    check(nm_sample_get(s.get(), 0, first.slot()), "sample");
    OutStream out(o.importance_out);
    *out.os << "word,importance\n";
    for (size_t i = 0; i < m; ++i) {
      const char* w = nm_laplacian_label(first.get(), i);
      *out.os << (w ? w : ("n" + std::to_string(i)).c_str()) << "," << fmt(imp[i]) << "\n";
    }
  }

  if (o.path_pc >= 1) {
    if (o.path_pc > r) throw CliError("--path-pc out of range", 1);
    for (double c : parse_c_list(o.path_c)) {
      LaplacianH point;
      check(nm_pca_path(pca.get(), cfg.get(), o.path_pc - 1, c, point.slot()), "pc path");
      std::string path = o.path_prefix + "pc" + std::to_string(o.path_pc) + "_" + c_tag(c) + ".csv";
      check(nm_laplacian_write_csv(point.get(), path.c_str()), path);
      std::cout << path << "\n";
    }
  }
}

struct RegressOpts {
  CommonOpts common;
  InputOpts in;
  std::string covariate = "year";
  std::string out;
  std::string fitted_out;
  int fitted_points = 25;
};

void run_regress(const RegressOpts& o) {
  if (o.covariate != "year")
    throw CliError("unknown covariate '" + o.covariate + "': manifests carry 'year'", 1);
  SampleH s = load_sample(o.in);
  ConfigH cfg = make_config(o.common);
  RegressionH reg;
  check(nm_regress(s.get(), cfg.get(), reg.slot()), "regression");

  double stat = 0.0, p = 0.0, df = 0.0;
  int small_sample = 0;
  check(nm_regression_lrt(reg.get(), 1, &stat, &p, &df, &small_sample), "lrt");

  json j;
  j["covariate"] = o.covariate;
  j["n"] = nm_sample_size(s.get());
  j["tangent_dim"] = nm_regression_dim(reg.get());
  j["coef_norms"] = {{"intercept", nm_regression_coef_norm(reg.get(), 0)},
                     {o.covariate, nm_regression_coef_norm(reg.get(), 1)}};
  j["lrt"] = {{"statistic", stat}, {"p_value", p}, {"df", df},
              {"small_sample", small_sample != 0}};
  j["config"] = config_json(cfg);
  OutStream out(o.out);
  *out.os << j.dump(2) << "\n";
  if (small_sample)
    std::cerr << "note: n < tangent dimension; the chi-square reference is approximate\n";

  if (!o.fitted_out.empty()) {
    // fitted curve projected into the sample's own PC coordinates
    PcaH pca;
    check(nm_pca_run(s.get(), cfg.get(), pca.slot()), "pca");
    size_t r = nm_pca_rank(pca.get());
    size_t keep = std::min<size_t>(r, 2);
    // covariate range from the manifest years is not exposed directly;
    // recover it from predictions at the observed extremes via labels
    std::vector<double> years;
    ManifestH manifest;
    if (!o.in.manifest.empty() &&
        nm_manifest_read(o.in.manifest.c_str(), manifest.slot()) == NM_OK) {
      for (size_t k = 0; k < nm_manifest_size(manifest.get()); ++k) {
        double y = 0.0;
        if (nm_manifest_year(manifest.get(), k, &y)) {
          const char* g = nm_manifest_group(manifest.get(), k);
          if (o.in.group.empty() || (g && o.in.group == g)) years.push_back(y);
        }
      }
    }
    if (years.empty()) throw CliError("--fitted-out needs a manifest with years", 1);
    double lo = *std::min_element(years.begin(), years.end());
    double hi = *std::max_element(years.begin(), years.end());
    OutStream fitted(o.fitted_out);
    *fitted.os << "t";
    for (size_t jx = 1; jx <= keep; ++jx) *fitted.os << ",pc" << jx;
    *fitted.os << "\n";
    int grid = std::max(2, o.fitted_points);
    std::vector<double> scores(r);
    for (int g = 0; g < grid; ++g) {
      double t = lo + (hi - lo) * static_cast<double>(g) / static_cast<double>(grid - 1);
      LaplacianH fit_point;
      check(nm_regression_predict(reg.get(), cfg.get(), &t, 1, fit_point.slot()), "predict");
      check(nm_pca_project(pca.get(), cfg.get(), fit_point.get(), scores.data()), "project");
      *fitted.os << fmt(t);
      for (size_t jx = 0; jx < keep; ++jx) *fitted.os << "," << fmt(scores[jx]);
      *fitted.os << "\n";
    }
  }
}

struct Test2Opts {
  CommonOpts common;
  InputOpts in;
  std::string dir_a, dir_b;
  std::string group_a, group_b;
  std::string method = "permutation";
  int r = 199;
  std::string out;
};

std::pair<SampleH, SampleH> load_groups(const InputOpts& in, const std::string& dir_a,
                                        const std::string& dir_b, const std::string& group_a,
                                        const std::string& group_b) {
  if (!dir_a.empty() || !dir_b.empty()) {
    if (dir_a.empty() || dir_b.empty()) throw CliError("pass both --dir-a and --dir-b", 1);
    InputOpts a, b;
    a.dir = dir_a;
    b.dir = dir_b;
    return {load_sample(a), load_sample(b)};
  }
  if (group_a.empty() || group_b.empty())
    throw CliError("pass --group-a/--group-b (with --manifest) or --dir-a/--dir-b", 1);
  InputOpts a = in, b = in;
  a.group = group_a;
  b.group = group_b;
  return {load_sample(a), load_sample(b)};
}

void run_test2(const Test2Opts& o) {
  auto [a, b] = load_groups(o.in, o.dir_a, o.dir_b, o.group_a, o.group_b);
  ConfigH cfg = make_config(o.common);
  Test2H res;
  check(nm_test2(a.get(), b.get(), cfg.get(), o.method.c_str(), o.r, res.slot()), "test2");

  json j;
  j["method"] = o.method;
  j["n_a"] = nm_sample_size(a.get());
  j["n_b"] = nm_sample_size(b.get());
  j["statistic"] = nm_test2_statistic(res.get());
  j["scaled_statistic"] = nm_test2_scaled_statistic(res.get());
  j["p_value"] = nm_test2_p_value(res.get());
  if (o.method == "permutation") {
    j["r"] = nm_test2_r(res.get());
    size_t np = nm_test2_n_permuted(res.get());
    std::vector<double> perm(np);
    check(nm_test2_permuted(res.get(), perm.data()), "test2");
    j["permuted_max"] = np ? perm.back() : 0.0;
    j["permuted_min"] = np ? perm.front() : 0.0;
  } else {
    size_t nd = nm_test2_n_deltas(res.get());
    std::vector<double> deltas(nd);
    check(nm_test2_deltas(res.get(), deltas.data()), "test2");
    j["n_deltas"] = nd;
    j["delta_sum"] = std::accumulate(deltas.begin(), deltas.end(), 0.0);
    j["delta_max"] = nd ? *std::max_element(deltas.begin(), deltas.end()) : 0.0;
  }
  j["seed"] = o.common.seed;
  j["config"] = config_json(cfg);
  OutStream out(o.out);
  *out.os << j.dump(2) << "\n";
}

struct EdgesOpts {
  CommonOpts common;
  InputOpts in;
  std::string dir_a, dir_b;
  std::string group_a, group_b;
  double beta = 0.2;
  double big_n = 200.0;
  size_t top = 100;
  std::string out;
};

void run_edges(const EdgesOpts& o) {
  auto [a, b] = load_groups(o.in, o.dir_a, o.dir_b, o.group_a, o.group_b);
  EdgesH table;
  check(nm_edges(a.get(), b.get(), o.beta, o.big_n, o.common.threads, table.slot()), "edges");
  size_t total = nm_edge_table_size(table.get());
  size_t shown = o.top == 0 ? total : std::min(o.top, total);
  std::cerr << "retained " << total << " pairs, dropped " << nm_edge_table_dropped(table.get())
            << "; q = " << fmt(nm_edge_table_q(table.get())) << "\n";
  OutStream out(o.out);
  auto node_name = [&](size_t i) {
    const char* l = nm_edge_table_node_label(table.get(), i);
    return l ? std::string(l) : ("n" + std::to_string(i));
  };
  if (o.common.format == "json") {
    json j;
    j["q"] = nm_edge_table_q(table.get());
    j["dropped"] = nm_edge_table_dropped(table.get());
    j["rows"] = json::array();
    for (size_t k = 0; k < shown; ++k) {
      size_t i = 0, jn = 0;
      double ma = 0, mb = 0, sp = 0, z = 0;
      check(nm_edge_table_row(table.get(), k, &i, &jn, &ma, &mb, &sp, &z), "edges");
      j["rows"].push_back({{"word_i", node_name(i)},
                           {"word_j", node_name(jn)},
                           {"mean_a", ma},
                           {"mean_b", mb},
                           {"s_p", sp},
                           {"z", z}});
    }
    *out.os << j.dump(2) << "\n";
  } else {
    *out.os << "word_i\tword_j\tmean_a\tmean_b\ts_p\tz\n";
    for (size_t k = 0; k < shown; ++k) {
      size_t i = 0, jn = 0;
      double ma = 0, mb = 0, sp = 0, z = 0;
      check(nm_edge_table_row(table.get(), k, &i, &jn, &ma, &mb, &sp, &z), "edges");
      *out.os << node_name(i) << "\t" << node_name(jn) << "\t" << fmt(ma) << "\t" << fmt(mb)
              << "\t" << fmt(sp) << "\t" << fmt(z) << "\n";
    }
  }
}

struct IngestOpts {
  std::string manifest;
  size_t m = 1000;
  int span = 5;
  std::string out_dir = "data";
  unsigned threads = 1;
};

void run_ingest(const IngestOpts& o) {
  size_t written = 0, skipped = 0;
  check(nm_ingest(o.manifest.c_str(), o.m, o.span, o.out_dir.c_str(), o.threads, &written,
                  &skipped),
        "ingest");
  std::cout << "wrote " << written << " Laplacians (m=" << o.m << ", span=" << o.span
            << ") and vocab.txt to " << o.out_dir << "\n";
  if (skipped > 0) std::cerr << "skipped " << skipped << " empty document(s)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extrinsic statistical analysis of samples of networks via graph Laplacians"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file (flags override)");

  IngestOpts ingest;
  auto* cmd_ingest = app.add_subcommand("ingest", "build co-occurrence networks from text")->fallthrough();
  cmd_ingest->add_option("--manifest", ingest.manifest, "manifest TSV (path/label/group/year)")
      ->required();
  cmd_ingest->add_option("--m", ingest.m, "vocabulary size");
  cmd_ingest->add_option("--span", ingest.span, "co-occurrence window span");
  cmd_ingest->add_option("--out", ingest.out_dir, "output directory");
  cmd_ingest->add_option("--threads", ingest.threads, "worker thread cap");

  DistOpts dist;
  auto* cmd_dist = app.add_subcommand("dist", "pairwise distance matrix")->fallthrough();
  add_common(cmd_dist, dist.common);
  add_inputs(cmd_dist, dist.in);
  cmd_dist->add_option("--out", dist.out, "output file (default stdout)");

  MdsOpts mds;
  auto* cmd_mds = app.add_subcommand("mds", "classical multidimensional scaling")->fallthrough();
  add_common(cmd_mds, mds.common);
  add_inputs(cmd_mds, mds.in);
  cmd_mds->add_option("--k", mds.k, "output dimensions");
  cmd_mds->add_option("--out", mds.out, "output file (default stdout)");

  ClusterOpts cluster;
  auto* cmd_cluster = app.add_subcommand("cluster", "Ward hierarchical clustering")->fallthrough();
  add_common(cmd_cluster, cluster.common);
  add_inputs(cmd_cluster, cluster.in);
  cmd_cluster->add_option("--ward", cluster.ward, "recurrence on squared (d2) or raw (d) distances")
      ->check(CLI::IsMember({"d2", "d"}));
  cmd_cluster->add_option("--out", cluster.out, "output file (default stdout)");

  MeanOpts mean;
  auto* cmd_mean = app.add_subcommand("mean", "extrinsic sample mean")->fallthrough();
  add_common(cmd_mean, mean.common);
  add_inputs(cmd_mean, mean.in);
  cmd_mean->add_option("--out", mean.out, "output Laplacian CSV");

  InterpolateOpts interp;
  auto* cmd_interp = app.add_subcommand("interpolate", "interpolation/extrapolation path points")->fallthrough();
  add_common(cmd_interp, interp.common);
  cmd_interp->add_option("--from", interp.from, "Laplacian CSV at c=0")->required();
  cmd_interp->add_option("--to", interp.to, "Laplacian CSV at c=1")->required();
  cmd_interp->add_option("--c", interp.c_list, "comma-separated path positions");
  cmd_interp->add_option("--out-prefix", interp.out_prefix, "output file prefix");

  PcaOpts pca;
  auto* cmd_pca = app.add_subcommand("pca", "tangent-space principal component analysis")->fallthrough();
  add_common(cmd_pca, pca.common);
  add_inputs(cmd_pca, pca.in);
  cmd_pca->add_option("--scores-out", pca.scores_out, "scores table (default stdout)");
  cmd_pca->add_option("--importance-out", pca.importance_out, "word importance table");
  cmd_pca->add_option("--importance-pc", pca.importance_pc, "component for --importance-out");
  cmd_pca->add_option("--path-pc", pca.path_pc, "write path points for this component");
  cmd_pca->add_option("--path-c", pca.path_c, "comma-separated path positions");
  cmd_pca->add_option("--path-prefix", pca.path_prefix, "path file prefix");

  RegressOpts regress;
  auto* cmd_regress = app.add_subcommand("regress", "extrinsic regression on a covariate")->fallthrough();
  add_common(cmd_regress, regress.common);
  add_inputs(cmd_regress, regress.in);
  cmd_regress->add_option("--covariate", regress.covariate, "covariate name (manifest: year)");
  cmd_regress->add_option("--out", regress.out, "JSON result (default stdout)");
  cmd_regress->add_option("--fitted-out", regress.fitted_out,
                          "fitted curve in PC coordinates (CSV)");
  cmd_regress->add_option("--fitted-points", regress.fitted_points, "grid size for --fitted-out");

  Test2Opts test2;
  auto* cmd_test2 = app.add_subcommand("test2", "two-sample test of equal mean networks")->fallthrough();
  add_common(cmd_test2, test2.common);
  add_inputs(cmd_test2, test2.in, false);
  cmd_test2->add_option("--method", test2.method, "asymptotic or permutation")
      ->check(CLI::IsMember({"asymptotic", "permutation"}));
  cmd_test2->add_option("--r", test2.r, "permutation count");
  cmd_test2->add_option("--group-a", test2.group_a, "group label for the first sample");
  cmd_test2->add_option("--group-b", test2.group_b, "group label for the second sample");
  cmd_test2->add_option("--dir-a", test2.dir_a, "directory of the first sample");
  cmd_test2->add_option("--dir-b", test2.dir_b, "directory of the second sample");
  cmd_test2->add_option("--out", test2.out, "JSON result (default stdout)");

  EdgesOpts edges;
  auto* cmd_edges = app.add_subcommand("edges", "edge-level z-statistic screen between groups")->fallthrough();
  add_common(cmd_edges, edges.common);
  add_inputs(cmd_edges, edges.in, false);
  cmd_edges->add_option("--group-a", edges.group_a, "group label for the first sample");
  cmd_edges->add_option("--group-b", edges.group_b, "group label for the second sample");
  cmd_edges->add_option("--dir-a", edges.dir_a, "directory of the first sample");
  cmd_edges->add_option("--dir-b", edges.dir_b, "directory of the second sample");
  cmd_edges->add_option("--beta", edges.beta, "mean/sd slope of the regularized variance");
  cmd_edges->add_option("--N", edges.big_n, "weight scale for the pooled variance");
  cmd_edges->add_option("--top", edges.top, "emit the top-k pairs by |z| (0 = all)");
  cmd_edges->add_option("--out", edges.out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_ingest->parsed()) run_ingest(ingest);
    if (cmd_dist->parsed()) run_dist(dist);
    if (cmd_mds->parsed()) run_mds(mds);
    if (cmd_cluster->parsed()) run_cluster(cluster);
    if (cmd_mean->parsed()) run_mean(mean);
    if (cmd_interp->parsed()) run_interpolate(interp);
    if (cmd_pca->parsed()) run_pca(pca);
    if (cmd_regress->parsed()) run_regress(regress);
    if (cmd_test2->parsed()) run_test2(test2);
    if (cmd_edges->parsed()) run_edges(edges);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
