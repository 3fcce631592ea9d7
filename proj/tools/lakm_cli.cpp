// Command-line harness: dataset generation, single clustering runs, and
// multi-trial benchmark sweeps.  Talks to the library exclusively through the
// C API so it doubles as a smoke test of the shared-library surface.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lakm.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitStrictWarning = 3;

struct cli_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(int rc) {
  if (rc != LAKM_OK) throw cli_error(lakm_last_error());
}

// Unique-ownership wrappers for the opaque handles.
struct PointsDel { void operator()(lakm_points* p) const { lakm_points_free(p); } };
struct LabelsDel { void operator()(lakm_labels* l) const { lakm_labels_free(l); } };
struct CentersDel { void operator()(lakm_centers* c) const { lakm_centers_free(c); } };
struct ResultDel { void operator()(lakm_result* r) const { lakm_result_free(r); } };
using PointsPtr = std::unique_ptr<lakm_points, PointsDel>;
using LabelsPtr = std::unique_ptr<lakm_labels, LabelsDel>;
using CentersPtr = std::unique_ptr<lakm_centers, CentersDel>;
using ResultPtr = std::unique_ptr<lakm_result, ResultDel>;

PointsPtr load_points(const std::string& path) {
  lakm_points* p = nullptr;
  check(lakm_points_load_csv(path.c_str(), &p));
  return PointsPtr(p);
}

LabelsPtr load_labels(const std::string& path) {
  lakm_labels* l = nullptr;
  check(lakm_labels_load_csv(path.c_str(), &l));
  return LabelsPtr(l);
}

std::string file_digest_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cli_error("cannot open for digest: " + path);
  uint64_t h = 14695981039346656037ull;
  char buf[65536];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

/* ---- predictor mini-grammar ----
 * SPEC := BASE [ '+' CORRUPTION ] | CORRUPTION
 * BASE := file:PATH | nn:REF_POINTS:REF_LABELS | kmeanspp:SEED
 * CORRUPTION := uniform:RATE | adversarial:RATE | deletion:RATE
 * A bare CORRUPTION applies to the --labels file. */
struct PredictorSpec {
  std::string base_kind;  // "labels", "file", "nn", "kmeanspp"
  std::string file_path;
  std::string nn_points;
  std::string nn_labels;
  uint64_t kmeanspp_seed = 0;
  int corrupt_mode = LAKM_CORRUPT_NONE;
  double corrupt_rate = 0.0;
};

double parse_rate(const std::string& s) {
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size() || !(v >= 0.0) || v > 1.0) {
    throw cli_error("corruption rate must be in [0,1]: " + s);
  }
  return v;
}

PredictorSpec parse_predictor(const std::string& spec) {
  PredictorSpec out;
  std::string base = spec;
  size_t plus = spec.find('+');
  std::string corr;
  if (plus != std::string::npos) {
    base = spec.substr(0, plus);
    corr = spec.substr(plus + 1);
  }
  auto parse_corr = [&out](const std::string& c) {
    size_t colon = c.find(':');
    if (colon == std::string::npos) throw cli_error("malformed corruption: " + c);
    std::string kind = c.substr(0, colon);
    out.corrupt_rate = parse_rate(c.substr(colon + 1));
    if (kind == "uniform") out.corrupt_mode = LAKM_CORRUPT_UNIFORM;
    else if (kind == "adversarial") out.corrupt_mode = LAKM_CORRUPT_ADVERSARIAL;
    else if (kind == "deletion") out.corrupt_mode = LAKM_CORRUPT_DELETION;
    else throw cli_error("unknown corruption kind: " + kind);
  };

  size_t colon = base.find(':');
  std::string kind = colon == std::string::npos ? base : base.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : base.substr(colon + 1);
  if (kind == "uniform" || kind == "adversarial" || kind == "deletion") {
    out.base_kind = "labels";
    parse_corr(base);
    if (!corr.empty()) throw cli_error("double corruption in predictor spec: " + spec);
    return out;
  }
  if (kind == "file") {
    if (rest.empty()) throw cli_error("file: predictor needs a path");
    out.base_kind = "file";
    out.file_path = rest;
  } else if (kind == "nn") {
    size_t sep = rest.find(':');
    if (sep == std::string::npos) throw cli_error("nn: predictor needs REF_POINTS:REF_LABELS");
    out.base_kind = "nn";
    out.nn_points = rest.substr(0, sep);
    out.nn_labels = rest.substr(sep + 1);
  } else if (kind == "kmeanspp") {
    out.base_kind = "kmeanspp";
    size_t pos = 0;
    out.kmeanspp_seed = std::stoull(rest, &pos);
    if (pos != rest.size()) throw cli_error("kmeanspp: predictor needs an integer seed");
  } else {
    throw cli_error("unknown predictor kind: " + kind);
  }
  if (!corr.empty()) parse_corr(corr);
  return out;
}

// Produces the predicted labels a run will consume.  `labels_path` backs the
// bare-corruption and default cases; `rate_override` lets sweeps re-corrupt at
// varying lambda without reparsing the spec.
LabelsPtr build_predictor(const PredictorSpec& spec, const lakm_points* points, size_t k,
                          uint64_t seed, const std::string& labels_path,
                          std::optional<double> rate_override = std::nullopt) {
  LabelsPtr base;
  if (spec.base_kind == "labels" || spec.base_kind.empty()) {
    if (labels_path.empty()) throw cli_error("predictor spec requires --labels");
    base = load_labels(labels_path);
  } else if (spec.base_kind == "file") {
    base = load_labels(spec.file_path);
  } else if (spec.base_kind == "nn") {
    PointsPtr ref = load_points(spec.nn_points);
    LabelsPtr ref_labels = load_labels(spec.nn_labels);
    lakm_labels* out = nullptr;
    check(lakm_nn_predictor(ref.get(), ref_labels.get(), points, &out));
    base = LabelsPtr(out);
  } else if (spec.base_kind == "kmeanspp") {
    lakm_labels* out = nullptr;
    check(lakm_kmeanspp_predictor(points, k, spec.kmeanspp_seed, &out));
    base = LabelsPtr(out);
  }
  if (lakm_labels_count(base.get()) != lakm_points_count(points)) {
    throw cli_error("label count does not match point count");
  }
  double rate = rate_override.value_or(spec.corrupt_rate);
  if (spec.corrupt_mode == LAKM_CORRUPT_NONE || rate == 0.0) return base;
  CentersPtr reference;
  if (spec.corrupt_mode == LAKM_CORRUPT_ADVERSARIAL) {
    lakm_centers* c = nullptr;
    check(lakm_class_centroids(points, base.get(), k, &c));
    reference = CentersPtr(c);
  }
  lakm_labels* out = nullptr;
  check(lakm_corrupt(base.get(), k, spec.corrupt_mode, rate, seed, points,
                     reference.get(), &out));
  return LabelsPtr(out);
}

double kmeanspp_mean_cost(const lakm_points* points, size_t k, uint64_t seed,
                          int trials, bool kmedian_objective) {
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    lakm_centers* c = nullptr;
    check(lakm_kmeanspp_seed(points, k, seed + static_cast<uint64_t>(t), &c));
    CentersPtr centers(c);
    double cost = 0.0;
    check(kmedian_objective ? lakm_cost_kmedian(points, centers.get(), &cost)
                            : lakm_cost_kmeans(points, centers.get(), &cost));
    total += cost;
  }
  return total / trials;
}

double read_optimal_cost(const std::string& ground_truth_path) {
  std::ifstream in(ground_truth_path);
  if (!in) throw cli_error("cannot open ground-truth file: " + ground_truth_path);
  ordered_json gt = ordered_json::parse(in, nullptr, true);
  if (!gt.contains("optimal_cost")) {
    throw cli_error("ground-truth JSON lacks optimal_cost: " + ground_truth_path);
  }
  return gt["optimal_cost"].get<double>();
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

/* ---- gen-synth ---- */

int run_gen_synth(size_t k, size_t d, double scale, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  lakm_points* p = nullptr;
  lakm_labels* l = nullptr;
  lakm_centers* c = nullptr;
  double optimal_cost = 0.0;
  check(lakm_gen_synth(k, d, scale, &p, &l, &c, &optimal_cost));
  PointsPtr points(p);
  LabelsPtr labels(l);
  CentersPtr centers(c);

  std::filesystem::path dir(out_dir);
  std::string points_path = (dir / "points.csv").string();
  std::string labels_path = (dir / "labels.csv").string();
  std::string centers_path = (dir / "optimal_centers.csv").string();
  check(lakm_points_save_csv(points.get(), points_path.c_str()));
  check(lakm_labels_save_csv(labels.get(), labels_path.c_str()));
  check(lakm_centers_save_csv(centers.get(), centers_path.c_str()));

  ordered_json gt;
  gt["k"] = k;
  gt["d"] = d;
  gt["scale"] = scale;
  gt["n"] = lakm_points_count(points.get());
  gt["optimal_cost"] = optimal_cost;
  gt["points_file"] = "points.csv";
  gt["labels_file"] = "labels.csv";
  gt["optimal_centers_file"] = "optimal_centers.csv";
  std::ofstream out(dir / "ground_truth.json");
  if (!out) throw cli_error("cannot write ground-truth JSON in " + out_dir);
  out << gt.dump(2) << "\n";
  return kExitOk;
}

/* ---- cluster ---- */

struct RunSpec {
  std::string points_path;
  std::string labels_path;
  std::string predictor_spec;
  size_t k = 0;
  std::string algo = "main";
  std::string alpha = "auto";
  uint64_t seed = 0;
  std::string out_path;
  std::string centers_out;
  std::string labels_out;
  std::string normalize = "kmeanspp";
  std::string ground_truth;
  int trials = 20;
  int threads = 0;
  bool strict = false;
};

double parse_alpha(const std::string& s) {
  if (s == "auto") return -1.0;
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size() || !(v > 0.0) || v >= 1.0) {
    throw cli_error("--alpha must be 'auto' or a number in (0,1): " + s);
  }
  return v;
}

ResultPtr run_algo(const std::string& algo, const lakm_points* points,
                   const lakm_labels* predicted, size_t k, double alpha,
                   uint64_t seed) {
  lakm_result* r = nullptr;
  if (algo == "main") {
    check(lakm_cluster_main(points, predicted, k, alpha, seed, &r));
  } else if (algo == "fast") {
    if (alpha < 0.0) throw cli_error("--algo fast requires a numeric --alpha");
    check(lakm_cluster_fast(points, predicted, k, alpha, seed, &r));
  } else if (algo == "deletion") {
    check(lakm_cluster_deletion(points, predicted, k, &r));
  } else if (algo == "kmedian") {
    if (alpha < 0.0) throw cli_error("--algo kmedian requires a numeric --alpha");
    check(lakm_cluster_kmedian(points, predicted, k, alpha, seed, &r));
  } else {
    throw cli_error("unknown algorithm: " + algo);
  }
  return ResultPtr(r);
}

int run_cluster(const RunSpec& spec) {
  if (spec.threads > 0) lakm_set_max_threads(spec.threads);
  auto t_start = std::chrono::steady_clock::now();

  PointsPtr points = load_points(spec.points_path);
  double t_load = elapsed_ms(t_start);

  auto t_pred = std::chrono::steady_clock::now();
  LabelsPtr predicted;
  if (!spec.predictor_spec.empty()) {
    predicted = build_predictor(parse_predictor(spec.predictor_spec), points.get(),
                                spec.k, spec.seed, spec.labels_path);
  } else if (!spec.labels_path.empty()) {
    predicted = load_labels(spec.labels_path);
    if (lakm_labels_count(predicted.get()) != lakm_points_count(points.get())) {
      throw cli_error("label count does not match point count");
    }
  } else {
    throw cli_error("cluster needs --labels or --predictor");
  }
  double t_predict = elapsed_ms(t_pred);

  double alpha = parse_alpha(spec.alpha);
  auto t_run = std::chrono::steady_clock::now();
  ResultPtr result =
      run_algo(spec.algo, points.get(), predicted.get(), spec.k, alpha, spec.seed);
  double t_cluster = elapsed_ms(t_run);

  const lakm_centers* centers = lakm_result_centers(result.get());
  bool kmedian_objective = spec.algo == "kmedian";
  double raw_cost = 0.0;
  check(kmedian_objective ? lakm_cost_kmedian(points.get(), centers, &raw_cost)
                          : lakm_cost_kmeans(points.get(), centers, &raw_cost));
  // The clustering the centers induce, scored with exact per-part centroids.
  // This is the recovery-claim metric; raw_cost keeps the center-set cost.
  double clustering_cost = raw_cost;
  if (!kmedian_objective) {
    lakm_labels* a = nullptr;
    check(lakm_assign_nearest(points.get(), centers, &a));
    LabelsPtr assigned(a);
    check(lakm_partition_cost_kmeans(points.get(), assigned.get(), spec.k,
                                     &clustering_cost));
  }

  auto t_norm = std::chrono::steady_clock::now();
  double denominator = 0.0;
  if (spec.normalize == "kmeanspp") {
    denominator = kmeanspp_mean_cost(points.get(), spec.k, spec.seed + 1000000,
                                     spec.trials, kmedian_objective);
  } else if (spec.normalize == "optimal") {
    if (spec.ground_truth.empty()) {
      throw cli_error("--normalize optimal requires --ground-truth");
    }
    denominator = read_optimal_cost(spec.ground_truth);
  } else {
    throw cli_error("--normalize must be kmeanspp or optimal");
  }
  if (!(denominator > 0.0)) throw cli_error("normalization denominator is not positive");
  double t_normalize = elapsed_ms(t_norm);

  std::vector<std::string> warnings;
  for (size_t i = 0; i < lakm_result_warning_count(result.get()); ++i) {
    warnings.emplace_back(lakm_result_warning(result.get(), i));
  }

  if (!spec.centers_out.empty()) {
    check(lakm_centers_save_csv(centers, spec.centers_out.c_str()));
  }
  if (!spec.labels_out.empty()) {
    const lakm_labels* out_labels = lakm_result_labels(result.get());
    LabelsPtr assigned;
    if (!out_labels) {
      lakm_labels* a = nullptr;
      check(lakm_assign_nearest(points.get(), centers, &a));
      assigned = LabelsPtr(a);
      out_labels = assigned.get();
    }
    check(lakm_labels_save_csv(out_labels, spec.labels_out.c_str()));
  }

  ordered_json report;
  report["algorithm"] = spec.algo;
  report["k"] = spec.k;
  report["alpha"] = lakm_result_alpha(result.get());
  report["seed"] = spec.seed;
  report["objective"] = kmedian_objective ? "kmedian" : "kmeans";
  report["raw_cost"] = format_double(raw_cost);
  report["clustering_cost"] = format_double(clustering_cost);
  report["normalized_cost"] = format_double(clustering_cost / denominator);
  report["normalization"] = {
      {"method", spec.normalize},
      {"trials", spec.normalize == "kmeanspp" ? spec.trials : 0},
      {"denominator", format_double(denominator)},
  };
  report["warnings"] = warnings;
  ordered_json digests;
  digests["points"] = file_digest_hex(spec.points_path);
  if (!spec.labels_path.empty()) digests["labels"] = file_digest_hex(spec.labels_path);
  report["input_digests"] = digests;
  report["timings_ms"] = {
      {"load", t_load},
      {"predict", t_predict},
      {"cluster", t_cluster},
      {"normalize", t_normalize},
      {"total", elapsed_ms(t_start)},
  };

  if (spec.out_path.empty() || spec.out_path == "-") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(spec.out_path);
    if (!out) throw cli_error("cannot write report: " + spec.out_path);
    out << report.dump(2) << "\n";
  }
  return (spec.strict && !warnings.empty()) ? kExitStrictWarning : kExitOk;
}

/* ---- bench ---- */

struct SweepSpec {
  std::string param;  // empty = no sweep (single point)
  std::vector<double> values;
};

SweepSpec parse_sweep(const std::string& s) {
  SweepSpec out;
  if (s.empty()) return out;
  size_t eq = s.find('=');
  if (eq == std::string::npos) throw cli_error("sweep must be NAME=SPEC: " + s);
  out.param = s.substr(0, eq);
  if (out.param != "lambda" && out.param != "q") {
    throw cli_error("sweep parameter must be lambda or q: " + out.param);
  }
  std::string rest = s.substr(eq + 1);
  if (rest.empty()) return out;  // explicit empty sweep -> header-only table
  if (rest.find(',') != std::string::npos) {
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.values.push_back(std::stod(tok));
    return out;
  }
  // start:step:stop, inclusive of stop up to rounding
  size_t c1 = rest.find(':');
  size_t c2 = rest.find(':', c1 == std::string::npos ? std::string::npos : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    out.values.push_back(std::stod(rest));
    return out;
  }
  double start = std::stod(rest.substr(0, c1));
  double step = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
  double stop = std::stod(rest.substr(c2 + 1));
  if (!(step > 0.0)) throw cli_error("sweep step must be positive");
  for (double v = start; v <= stop + step * 1e-9; v += step) out.values.push_back(v);
  return out;
}

struct BenchRow {
  std::string algorithm;
  std::string sweep_param;
  double sweep_value = 0.0;
  bool has_sweep = false;
  int trials = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::vector<std::string> warnings;
};

struct BenchSpec {
  std::string points_path;
  std::string labels_path;
  std::string predictor_spec;
  size_t k = 0;
  std::vector<std::string> algos;
  std::string alpha = "0.05";
  uint64_t seed = 0;
  int trials = 20;
  std::string sweep;
  std::string out_path;
  std::string normalize = "kmeanspp";
  std::string ground_truth;
  int threads = 0;
  bool strict = false;
};

// One trial of one algorithm at one sweep point; returns raw cost.
double bench_trial(const BenchSpec& spec, const std::string& algo,
                   const lakm_points* points, const PredictorSpec& pred, double alpha,
                   const std::string& sweep_param, double sweep_value, bool has_sweep,
                   uint64_t trial_seed, std::vector<std::string>* warnings) {
  bool kmedian_objective = algo == "kmedian";
  std::optional<double> lambda;
  if (has_sweep && sweep_param == "lambda") lambda = sweep_value;

  PredictorSpec effective = pred;
  if (lambda && effective.corrupt_mode == LAKM_CORRUPT_NONE) {
    effective.corrupt_mode =
        algo == "deletion" ? LAKM_CORRUPT_DELETION : LAKM_CORRUPT_UNIFORM;
  }

  if (algo == "kmeanspp") {
    lakm_centers* c = nullptr;
    check(lakm_kmeanspp_seed(points, spec.k, trial_seed, &c));
    CentersPtr centers(c);
    double cost = 0.0;
    check(lakm_cost_kmeans(points, centers.get(), &cost));
    return cost;
  }

  LabelsPtr predicted = build_predictor(effective, points, spec.k, trial_seed,
                                        spec.labels_path, lambda);

  auto record_warnings = [warnings](lakm_result* r) {
    for (size_t i = 0; i < lakm_result_warning_count(r); ++i) {
      warnings->emplace_back(lakm_result_warning(r, i));
    }
  };

  if (algo == "naive") {
    lakm_centers* c = nullptr;
    check(lakm_class_centroids(points, predicted.get(), spec.k, &c));
    CentersPtr centers(c);
    double cost = 0.0;
    check(lakm_cost_kmeans(points, centers.get(), &cost));
    return cost;
  }
  if (algo == "sampling") {
    double q = (has_sweep && sweep_param == "q") ? sweep_value : -1.0;
    lakm_result* r = nullptr;
    if (q > 0.0) {
      check(lakm_random_sampling_baseline(points, predicted.get(), spec.k, &q, 1,
                                          trial_seed, &r));
    } else {
      check(lakm_random_sampling_baseline(points, predicted.get(), spec.k, nullptr, 0,
                                          trial_seed, &r));
    }
    ResultPtr result(r);
    record_warnings(result.get());
    double cost = 0.0;
    check(lakm_cost_kmeans(points, lakm_result_centers(result.get()), &cost));
    return cost;
  }

  ResultPtr result = run_algo(algo, points, predicted.get(), spec.k, alpha, trial_seed);
  record_warnings(result.get());
  double cost = 0.0;
  if (kmedian_objective) {
    check(lakm_cost_kmedian(points, lakm_result_centers(result.get()), &cost));
  } else {
    // Algorithm rows are scored as clusterings (induced partition with exact
    // centroids); baseline rows above use the raw center-set cost.
    lakm_labels* a = nullptr;
    check(lakm_assign_nearest(points, lakm_result_centers(result.get()), &a));
    LabelsPtr assigned(a);
    check(lakm_partition_cost_kmeans(points, assigned.get(), spec.k, &cost));
  }
  return cost;
}

int run_bench(const BenchSpec& spec) {
  if (spec.threads > 0) lakm_set_max_threads(spec.threads);
  PointsPtr points = load_points(spec.points_path);
  PredictorSpec pred;
  if (!spec.predictor_spec.empty()) {
    pred = parse_predictor(spec.predictor_spec);
  } else if (spec.labels_path.empty()) {
    throw cli_error("bench needs --labels or --predictor");
  }
  double alpha = parse_alpha(spec.alpha);
  SweepSpec sweep = parse_sweep(spec.sweep);

  double denom_kmeans = 0.0, denom_kmedian = 0.0;
  bool want_kmedian = false, want_kmeans = false;
  for (const auto& a : spec.algos) (a == "kmedian" ? want_kmedian : want_kmeans) = true;
  if (spec.normalize == "kmeanspp") {
    if (want_kmeans) {
      denom_kmeans = kmeanspp_mean_cost(points.get(), spec.k, spec.seed + 1000000,
                                        spec.trials, false);
    }
    if (want_kmedian) {
      denom_kmedian = kmeanspp_mean_cost(points.get(), spec.k, spec.seed + 1000000,
                                         spec.trials, true);
    }
  } else if (spec.normalize == "optimal") {
    if (spec.ground_truth.empty()) {
      throw cli_error("--normalize optimal requires --ground-truth");
    }
    denom_kmeans = denom_kmedian = read_optimal_cost(spec.ground_truth);
  } else {
    throw cli_error("--normalize must be kmeanspp or optimal");
  }

  std::vector<BenchRow> rows;
  bool has_sweep_points = sweep.param.empty() || !sweep.values.empty();
  std::vector<double> sweep_values =
      sweep.param.empty() ? std::vector<double>{0.0} : sweep.values;

  for (const auto& algo : spec.algos) {
    if (!has_sweep_points) break;
    for (double sv : sweep_values) {
      BenchRow row;
      row.algorithm = algo;
      row.sweep_param = sweep.param;
      row.sweep_value = sv;
      row.has_sweep = !sweep.param.empty();
      row.trials = spec.trials;
      double denom = algo == "kmedian" ? denom_kmedian : denom_kmeans;
      if (!(denom > 0.0)) throw cli_error("normalization denominator is not positive");
      std::vector<double> normalized(spec.trials);
      for (int t = 0; t < spec.trials; ++t) {
        uint64_t trial_seed = spec.seed + static_cast<uint64_t>(t);
        double cost = bench_trial(spec, algo, points.get(), pred, alpha, sweep.param,
                                  sv, row.has_sweep, trial_seed, &row.warnings);
        normalized[t] = cost / denom;
      }
      double mean = 0.0;
      for (double v : normalized) mean += v;
      mean /= spec.trials;
      double var = 0.0;
      for (double v : normalized) var += (v - mean) * (v - mean);
      row.mean = mean;
      row.stddev = spec.trials > 1 ? std::sqrt(var / (spec.trials - 1)) : 0.0;
      rows.push_back(std::move(row));
    }
  }

  bool json_out = spec.out_path.size() >= 5 &&
                  spec.out_path.compare(spec.out_path.size() - 5, 5, ".json") == 0;
  std::ostringstream table;
  if (json_out) {
    ordered_json doc;
    doc["trials"] = spec.trials;
    doc["normalize"] = spec.normalize;
    doc["seed"] = spec.seed;
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json jr;
      jr["algorithm"] = r.algorithm;
      jr["sweep_param"] = r.sweep_param;
      jr["sweep_value"] = r.has_sweep ? format_double(r.sweep_value) : "";
      jr["trials"] = r.trials;
      jr["mean_normalized_cost"] = format_double(r.mean);
      jr["std_normalized_cost"] = format_double(r.stddev);
      jr["warnings"] = r.warnings;
      doc["rows"].push_back(std::move(jr));
    }
    table << doc.dump(2) << "\n";
  } else {
    table << "algorithm,sweep_param,sweep_value,trials,mean_normalized_cost,"
             "std_normalized_cost\n";
    for (const auto& r : rows) {
      table << r.algorithm << ',' << r.sweep_param << ','
            << (r.has_sweep ? format_double(r.sweep_value) : "") << ',' << r.trials
            << ',' << format_double(r.mean) << ',' << format_double(r.stddev) << "\n";
    }
  }
  if (spec.out_path.empty() || spec.out_path == "-") {
    std::cout << table.str();
  } else {
    std::ofstream out(spec.out_path);
    if (!out) throw cli_error("cannot write table: " + spec.out_path);
    out << table.str();
  }

  bool any_warning = false;
  for (const auto& r : rows) any_warning = any_warning || !r.warnings.empty();
  return (spec.strict && any_warning) ? kExitStrictWarning : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"learning-augmented clustering harness"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen-synth", "generate the seeding lower-bound instance");
  size_t gk = 10, gd = 1000;
  double gscale = 1000.0;
  std::string out_dir;
  gen->add_option("--k", gk, "number of clusters");
  gen->add_option("--d", gd, "dimension");
  gen->add_option("--scale", gscale, "basis scale");
  gen->add_option("--out-dir", out_dir, "output directory")->required();

  RunSpec run;
  auto* cluster = app.add_subcommand("cluster", "run one algorithm once");
  cluster->add_option("--points", run.points_path, "points CSV")->required();
  cluster->add_option("--labels", run.labels_path, "predicted/true labels CSV");
  cluster->add_option("--predictor", run.predictor_spec,
                      "predictor spec: file:PATH | nn:P:L | kmeanspp:SEED "
                      "[+uniform:R|+adversarial:R|+deletion:R], or bare corruption of --labels");
  cluster->add_option("--k", run.k, "number of clusters")->required();
  cluster->add_option("--algo", run.algo, "main|fast|deletion|kmedian");
  cluster->add_option("--alpha", run.alpha, "error-rate parameter, or 'auto'");
  cluster->add_option("--seed", run.seed, "rng seed");
  cluster->add_option("--out", run.out_path, "report JSON path ('-' = stdout)");
  cluster->add_option("--centers-out", run.centers_out, "centers CSV path");
  cluster->add_option("--labels-out", run.labels_out, "final labels CSV path");
  cluster->add_option("--normalize", run.normalize, "kmeanspp|optimal");
  cluster->add_option("--ground-truth", run.ground_truth, "ground-truth JSON (for optimal)");
  cluster->add_option("--trials", run.trials, "kmeans++ normalization trials");
  cluster->add_option("--threads", run.threads, "thread cap (0 = hardware)");
  cluster->add_flag("--strict", run.strict, "exit 3 on algorithm warnings");

  BenchSpec bench;
  auto* bn = app.add_subcommand("bench", "multi-trial comparison table");
  bn->add_option("--points", bench.points_path, "points CSV")->required();
  bn->add_option("--labels", bench.labels_path, "labels CSV");
  bn->add_option("--predictor", bench.predictor_spec, "predictor spec (see cluster)");
  bn->add_option("--k", bench.k, "number of clusters")->required();
  bn->add_option("--algos", bench.algos,
                 "algorithms: main fast deletion kmedian naive kmeanspp sampling")
      ->delimiter(',');
  bn->add_option("--alpha", bench.alpha, "error-rate parameter, or 'auto'");
  bn->add_option("--seed", bench.seed, "base rng seed");
  bn->add_option("--trials", bench.trials, "trials per row");
  bn->add_option("--sweep", bench.sweep, "lambda=a:step:b | lambda=v1,v2 | q=...");
  bn->add_option("--out", bench.out_path, "table path (.json for JSON, else CSV)");
  bn->add_option("--normalize", bench.normalize, "kmeanspp|optimal");
  bn->add_option("--ground-truth", bench.ground_truth, "ground-truth JSON (for optimal)");
  bn->add_option("--threads", bench.threads, "thread cap (0 = hardware)");
  bn->add_flag("--strict", bench.strict, "exit 3 on algorithm warnings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen->parsed()) return run_gen_synth(gk, gd, gscale, out_dir);
    if (cluster->parsed()) return run_cluster(run);
    if (bench.algos.empty()) bench.algos = {"main"};
    return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
