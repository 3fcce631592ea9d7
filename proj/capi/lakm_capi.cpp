#include "lakm.h"

#include <string>
#include <utility>
#include <vector>

#include "lakm/baselines.hpp"
#include "lakm/core.hpp"
#include "lakm/deletion.hpp"
#include "lakm/fast_pipeline.hpp"
#include "lakm/io.hpp"
#include "lakm/kmedian.hpp"
#include "lakm/learned_kmeans.hpp"
#include "lakm/predictors.hpp"
#include "lakm/synthgen.hpp"

struct lakm_points {
  lakm::PointSet rep;
};
struct lakm_labels {
  lakm::LabelAssignment rep;
};
struct lakm_centers {
  lakm::CenterSet rep;
};
struct lakm_result {
  lakm_centers centers;
  lakm_labels labels;
  bool has_labels = false;
  double alpha = 0.0;
  double q = 0.0;
  std::vector<std::string> warnings;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return LAKM_OK;
  } catch (const lakm::invalid_input& e) {
    g_last_error = e.what();
    return LAKM_ERR_INVALID;
  } catch (const lakm::io_error& e) {
    g_last_error = e.what();
    return LAKM_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LAKM_ERR_INTERNAL;
  }
}

int require(bool cond, const char* msg) {
  if (cond) return LAKM_OK;
  g_last_error = msg;
  return LAKM_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* lakm_last_error(void) { return g_last_error.c_str(); }

void lakm_set_max_threads(int n) { lakm::set_max_threads(n); }

/* ---- points ---- */

int lakm_points_create(const double* data, size_t n, size_t d, lakm_points** out) {
  if (int rc = require(data && out, "null argument")) return rc;
  return guarded([&] {
    *out = new lakm_points{
        lakm::PointSet::create(n, d, std::vector<double>(data, data + n * d))};
  });
}

int lakm_points_load_csv(const char* path, lakm_points** out) {
  if (int rc = require(path && out, "null argument")) return rc;
  return guarded([&] { *out = new lakm_points{lakm::read_points_csv(path)}; });
}

int lakm_points_save_csv(const lakm_points* p, const char* path) {
  if (int rc = require(p && path, "null argument")) return rc;
  return guarded([&] { lakm::write_points_csv(path, p->rep); });
}

size_t lakm_points_count(const lakm_points* p) { return p ? p->rep.size() : 0; }
size_t lakm_points_dim(const lakm_points* p) { return p ? p->rep.dim() : 0; }
const double* lakm_points_data(const lakm_points* p) {
  return p ? p->rep.values().data() : nullptr;
}
void lakm_points_free(lakm_points* p) { delete p; }

/* ---- labels ---- */

int lakm_labels_create(const int32_t* data, size_t n, lakm_labels** out) {
  if (int rc = require(data && out, "null argument")) return rc;
  *out = new lakm_labels{lakm::LabelAssignment(data, data + n)};
  return LAKM_OK;
}

int lakm_labels_load_csv(const char* path, lakm_labels** out) {
  if (int rc = require(path && out, "null argument")) return rc;
  return guarded([&] { *out = new lakm_labels{lakm::read_labels_csv(path)}; });
}

int lakm_labels_save_csv(const lakm_labels* l, const char* path) {
  if (int rc = require(l && path, "null argument")) return rc;
  return guarded([&] { lakm::write_labels_csv(path, l->rep); });
}

size_t lakm_labels_count(const lakm_labels* l) { return l ? l->rep.size() : 0; }
const int32_t* lakm_labels_data(const lakm_labels* l) {
  return l ? l->rep.data() : nullptr;
}
void lakm_labels_free(lakm_labels* l) { delete l; }

/* ---- centers ---- */

int lakm_centers_create(const double* data, size_t k, size_t d, lakm_centers** out) {
  if (int rc = require(data && out, "null argument")) return rc;
  return guarded([&] {
    *out = new lakm_centers{
        lakm::CenterSet::create(k, d, std::vector<double>(data, data + k * d))};
  });
}

int lakm_centers_save_csv(const lakm_centers* c, const char* path) {
  if (int rc = require(c && path, "null argument")) return rc;
  return guarded([&] { lakm::write_centers_csv(path, c->rep); });
}

size_t lakm_centers_count(const lakm_centers* c) { return c ? c->rep.size() : 0; }
size_t lakm_centers_dim(const lakm_centers* c) { return c ? c->rep.dim() : 0; }
const double* lakm_centers_data(const lakm_centers* c) {
  return c ? c->rep.values().data() : nullptr;
}
void lakm_centers_free(lakm_centers* c) { delete c; }

/* ---- objectives ---- */

int lakm_cost_kmeans(const lakm_points* p, const lakm_centers* c, double* out) {
  if (int rc = require(p && c && out, "null argument")) return rc;
  return guarded([&] { *out = lakm::cost_kmeans(p->rep, c->rep); });
}

int lakm_cost_kmedian(const lakm_points* p, const lakm_centers* c, double* out) {
  if (int rc = require(p && c && out, "null argument")) return rc;
  return guarded([&] { *out = lakm::cost_kmedian(p->rep, c->rep); });
}

int lakm_assign_nearest(const lakm_points* p, const lakm_centers* c, lakm_labels** out) {
  if (int rc = require(p && c && out, "null argument")) return rc;
  return guarded([&] { *out = new lakm_labels{lakm::assign_nearest(p->rep, c->rep)}; });
}

int lakm_partition_cost_kmeans(const lakm_points* p, const lakm_labels* l, size_t k,
                               double* out) {
  if (int rc = require(p && l && out, "null argument")) return rc;
  return guarded([&] {
    const auto& labels = l->rep;
    if (labels.size() != p->rep.size()) {
      throw lakm::invalid_input("label count does not match point count");
    }
    const size_t d = p->rep.dim();
    std::vector<double> sums(k * d, 0.0);
    std::vector<size_t> counts(k, 0);
    for (size_t i = 0; i < labels.size(); ++i) {
      int32_t lab = labels[i];
      if (lab < 0 || static_cast<size_t>(lab) >= k) {
        throw lakm::invalid_input("partition cost needs labels in [0,k)");
      }
      auto row = p->rep.row(i);
      double* s = sums.data() + static_cast<size_t>(lab) * d;
      for (size_t j = 0; j < d; ++j) s[j] += row[j];
      ++counts[static_cast<size_t>(lab)];
    }
    for (size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      double* s = sums.data() + c * d;
      for (size_t j = 0; j < d; ++j) s[j] /= static_cast<double>(counts[c]);
    }
    lakm::Accumulator acc;
    for (size_t i = 0; i < labels.size(); ++i) {
      auto row = p->rep.row(i);
      const double* cent = sums.data() + static_cast<size_t>(labels[i]) * d;
      double d2 = 0.0;
      for (size_t j = 0; j < d; ++j) {
        double diff = row[j] - cent[j];
        d2 += diff * diff;
      }
      acc.add(d2);
    }
    *out = acc.value();
  });
}

int lakm_class_centroids(const lakm_points* p, const lakm_labels* l, size_t k,
                         lakm_centers** out) {
  if (int rc = require(p && l && out, "null argument")) return rc;
  return guarded(
      [&] { *out = new lakm_centers{lakm::class_centroids(p->rep, l->rep, k)}; });
}

/* ---- predictors ---- */

int lakm_corrupt(const lakm_labels* l, size_t k, int mode, double rate, uint64_t seed,
                 const lakm_points* points, const lakm_centers* reference,
                 lakm_labels** out) {
  if (int rc = require(l && out, "null argument")) return rc;
  return guarded([&] {
    lakm::PredictorSpec spec;
    switch (mode) {
      case LAKM_CORRUPT_NONE: spec.mode = lakm::CorruptMode::none; break;
      case LAKM_CORRUPT_UNIFORM: spec.mode = lakm::CorruptMode::uniform; break;
      case LAKM_CORRUPT_ADVERSARIAL: spec.mode = lakm::CorruptMode::adversarial; break;
      case LAKM_CORRUPT_DELETION: spec.mode = lakm::CorruptMode::deletion; break;
      default: throw lakm::invalid_input("unknown corruption mode");
    }
    spec.rate = rate;
    spec.seed = seed;
    *out = new lakm_labels{lakm::corrupt(l->rep, k, spec, points ? &points->rep : nullptr,
                                         reference ? &reference->rep : nullptr)};
  });
}

int lakm_nn_predictor(const lakm_points* ref_points, const lakm_labels* ref_labels,
                      const lakm_points* query_points, lakm_labels** out) {
  if (int rc = require(ref_points && ref_labels && query_points && out, "null argument")) {
    return rc;
  }
  return guarded([&] {
    *out = new lakm_labels{
        lakm::nn_predictor(ref_points->rep, ref_labels->rep, query_points->rep)};
  });
}

int lakm_kmeanspp_predictor(const lakm_points* p, size_t k, uint64_t seed,
                            lakm_labels** out) {
  if (int rc = require(p && out, "null argument")) return rc;
  return guarded([&] {
    *out = new lakm_labels{lakm::kmeanspp_predictor(p->rep, k, lakm::RngStream{seed, 0})};
  });
}

/* ---- baselines ---- */

int lakm_kmeanspp_seed(const lakm_points* p, size_t k, uint64_t seed, lakm_centers** out) {
  if (int rc = require(p && out, "null argument")) return rc;
  return guarded([&] {
    *out = new lakm_centers{lakm::kmeanspp_seed(p->rep, k, lakm::RngStream{seed, 0})};
  });
}

int lakm_lloyd(const lakm_points* p, const lakm_centers* init, size_t max_iters,
               double tol, lakm_centers** out) {
  if (int rc = require(p && init && out, "null argument")) return rc;
  return guarded(
      [&] { *out = new lakm_centers{lakm::lloyd(p->rep, init->rep, max_iters, tol)}; });
}

int lakm_random_sampling_baseline(const lakm_points* p, const lakm_labels* l, size_t k,
                                  const double* q_grid, size_t q_count, uint64_t seed,
                                  lakm_result** out) {
  if (int rc = require(p && l && out, "null argument")) return rc;
  return guarded([&] {
    std::vector<double> grid = q_grid ? std::vector<double>(q_grid, q_grid + q_count)
                                      : lakm::default_q_grid();
    auto run = lakm::random_sampling_baseline(p->rep, l->rep, k, grid,
                                              lakm::RngStream{seed, 0});
    auto* r = new lakm_result;
    r->centers.rep = std::move(run.centers);
    r->q = run.q;
    r->warnings = std::move(run.warnings);
    *out = r;
  });
}

/* ---- clustering runs ---- */

int lakm_cluster_main(const lakm_points* p, const lakm_labels* predicted, size_t k,
                      double alpha, uint64_t seed, lakm_result** out) {
  if (int rc = require(p && predicted && out, "null argument")) return rc;
  return guarded([&] {
    auto* r = new lakm_result;
    lakm::RngStream rng{seed, 0};
    if (alpha < 0.0) {
      auto sel = lakm::select_alpha(p->rep, predicted->rep, k, lakm::AlphaGrid{}, rng);
      r->centers.rep = std::move(sel.centers);
      r->alpha = sel.alpha;
      r->warnings = std::move(sel.warnings);
    } else {
      auto run = lakm::cluster_with_predictor(p->rep, predicted->rep, k, alpha, rng);
      r->centers.rep = std::move(run.centers);
      r->alpha = alpha;
      r->warnings = std::move(run.warnings);
    }
    *out = r;
  });
}

int lakm_cluster_fast(const lakm_points* p, const lakm_labels* predicted, size_t k,
                      double alpha, uint64_t seed, lakm_result** out) {
  if (int rc = require(p && predicted && out, "null argument")) return rc;
  return guarded([&] {
    if (alpha < 0.0) throw lakm::invalid_input("fast run needs an explicit alpha");
    auto run = lakm::fast_cluster(p->rep, predicted->rep, k, alpha,
                                  lakm::RngStream{seed, 0});
    auto* r = new lakm_result;
    r->centers.rep = std::move(run.centers);
    r->labels.rep = std::move(run.labels);
    r->has_labels = true;
    r->alpha = alpha;
    r->warnings = std::move(run.warnings);
    *out = r;
  });
}

int lakm_cluster_deletion(const lakm_points* p, const lakm_labels* partial, size_t k,
                          lakm_result** out) {
  if (int rc = require(p && partial && out, "null argument")) return rc;
  return guarded([&] {
    auto run = lakm::deletion_cluster(p->rep, partial->rep, k);
    auto* r = new lakm_result;
    r->centers.rep = std::move(run.centers);
    r->labels.rep = std::move(run.labels);
    r->has_labels = true;
    r->warnings = std::move(run.warnings);
    *out = r;
  });
}

int lakm_cluster_kmedian(const lakm_points* p, const lakm_labels* predicted, size_t k,
                         double alpha, uint64_t seed, lakm_result** out) {
  if (int rc = require(p && predicted && out, "null argument")) return rc;
  return guarded([&] {
    if (alpha < 0.0) throw lakm::invalid_input("k-median run needs an explicit alpha");
    auto run = lakm::kmedian_cluster(p->rep, predicted->rep, k, alpha,
                                     lakm::RngStream{seed, 0});
    auto* r = new lakm_result;
    r->centers.rep = std::move(run.centers);
    r->alpha = alpha;
    r->warnings = std::move(run.warnings);
    *out = r;
  });
}

/* ---- results ---- */

const lakm_centers* lakm_result_centers(const lakm_result* r) {
  return r ? &r->centers : nullptr;
}

const lakm_labels* lakm_result_labels(const lakm_result* r) {
  return (r && r->has_labels) ? &r->labels : nullptr;
}

double lakm_result_alpha(const lakm_result* r) { return r ? r->alpha : 0.0; }
double lakm_result_q(const lakm_result* r) { return r ? r->q : 0.0; }

size_t lakm_result_warning_count(const lakm_result* r) {
  return r ? r->warnings.size() : 0;
}

const char* lakm_result_warning(const lakm_result* r, size_t i) {
  if (!r || i >= r->warnings.size()) return nullptr;
  return r->warnings[i].c_str();
}

void lakm_result_free(lakm_result* r) { delete r; }

/* ---- synthetic data ---- */

int lakm_gen_synth(size_t k, size_t d, double scale, lakm_points** points,
                   lakm_labels** labels, lakm_centers** optimal_centers,
                   double* optimal_cost) {
  return guarded([&] {
    auto inst = lakm::lower_bound_instance(k, d, scale);
    if (points) *points = new lakm_points{std::move(inst.points)};
    if (labels) *labels = new lakm_labels{std::move(inst.labels)};
    if (optimal_centers) *optimal_centers = new lakm_centers{std::move(inst.optimal_centers)};
    if (optimal_cost) *optimal_cost = inst.optimal_cost;
  });
}

} /* extern "C" */
